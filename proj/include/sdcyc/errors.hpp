#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdcyc {

// Exact counts. Ideal and code counts overflow 64 bits quickly.
using Count = boost::multiprecision::cpp_int;

enum class ErrorKind {
  ZeroInverse,
  DegreeZero,
  EvenN,
  BaseMismatch,
  TooLarge,
  OutOfRange,
  UnsupportedK,
  NotSelfDual,
  MinDistOfTrivial,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::EvenN: return "EvenN";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnsupportedK: return "UnsupportedK";
    case ErrorKind::NotSelfDual: return "NotSelfDual";
    case ErrorKind::MinDistOfTrivial: return "MinDistOfTrivial";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline std::string to_string(const Count& c) { return c.str(); }

}  // namespace sdcyc
