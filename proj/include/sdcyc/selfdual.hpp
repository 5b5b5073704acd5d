#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sdcyc/ideals.hpp"
#include "sdcyc/instance.hpp"

namespace sdcyc {

// Theta_{j,s}: units w of F_j[u]/<u^s> with w + delta_j x^{-d_j} w(x^{-1}) = 0,
// for a self-reciprocal component j. Coefficients are packed F_j elements.
class ThetaSet {
 public:
  ThetaSet(const Instance& inst, int j, int s);
  // Same set built from a caller-chosen primitive element of F_j.
  ThetaSet(const Instance& inst, int j, int s, std::uint64_t primitive);

  int j() const { return j_; }
  int s() const { return s_; }
  // |Theta_{j,1}| + 1, the size of the coefficient alphabet {0} u Theta_{j,1}.
  const Count& base() const { return q_; }
  Count size() const;
  // Member at a mixed-radix index: a_0 runs over Theta_{j,1}, a_i over {0} u Theta_{j,1}.
  std::vector<std::uint64_t> at(const Count& index) const;
  bool contains(const std::vector<std::uint64_t>& w) const;
  bool contains_base(std::uint64_t a) const;
  // Every member, numerically sorted; size capped at 2^20.
  std::vector<std::vector<std::uint64_t>> members() const;

 private:
  void init(std::optional<std::uint64_t> primitive);
  std::uint64_t base_at(const Count& l) const;  // l-th element of Theta_{j,1}

  const Instance* inst_;
  int j_;
  int s_;
  Count q_;
  std::uint64_t gen_ = 0;       // rho^{Q+1}, generator of Theta_{j,1} up to the shift
  std::uint64_t shift_ = 1;     // x^{-d_j/2}
  std::uint64_t unshift_ = 1;   // x^{d_j/2}
  bool have_gen_ = false;
};

ThetaSet theta_set(const Instance& inst, int j, int s);
// Test oracle: every unit of F_j[u]/<u^s> satisfying the defining congruence, by exhaustion.
std::vector<std::vector<std::uint64_t>> theta_filter(const Instance& inst, int j, int s);

// Ideal C_{rho(j)} that C_j must be paired with for self-duality.
IdealLabel mate_label(const IdealLabel& label, const Instance& inst);
bool is_self_dual(const CyclicCode& code, const Instance& inst);

// Lazy product of per-slot choices; each slot fills one or two components.
class SlotProduct {
 public:
  using Fill = std::function<void(const Count&, std::vector<IdealLabel>&)>;

  void add(Count size, Fill fill);
  const Count& size() const { return total_; }
  CyclicCode at(const Instance& inst, const Count& index) const;
  // Visits codes [begin, end) in index order; stops early when fn returns false.
  void for_range(const Instance& inst, const Count& begin, const Count& end,
                 const std::function<bool(const CyclicCode&)>& fn) const;

 private:
  struct Slot {
    Count size;
    Fill fill;
  };
  std::vector<Slot> slots_;
  Count total_ = 1;
};

class SelfDualEnumerator {
 public:
  explicit SelfDualEnumerator(const Instance& inst);

  const Count& size() const { return prod_.size(); }
  CyclicCode at(const Count& index) const { return prod_.at(*inst_, index); }
  void for_each(const std::function<bool(const CyclicCode&)>& fn) const { prod_.for_range(*inst_, 0, size(), fn); }
  void for_range(const Count& begin, const Count& end, const std::function<bool(const CyclicCode&)>& fn) const {
    prod_.for_range(*inst_, begin, end, fn);
  }

 private:
  const Instance* inst_;
  SlotProduct prod_;
};

// Materialized enumeration; refuses more than 2^24 codes.
std::vector<CyclicCode> enumerate_selfdual(const Instance& inst);
Count count_selfdual(const FactorData& fd, int k);
inline Count count_selfdual(const Instance& inst) { return count_selfdual(inst.fd, inst.k); }

// Closed per-k lists, written out row by row, as an independent generator.
std::vector<CyclicCode> selfdual_k2_list(const Instance& inst);
std::vector<CyclicCode> selfdual_k345_list(const Instance& inst);

}  // namespace sdcyc
