#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sdcyc/errors.hpp"

namespace sdcyc {

// Element of F_{2^m}: coefficient bits over the basis {1, y, ..., y^{m-1}}.
using Fq = std::uint32_t;

// Polynomials over F_2 packed into a word, bit i = coefficient of y^i.
bool is_irreducible_f2(std::uint64_t poly);
int f2_degree(std::uint64_t poly);

class FieldCtx {
 public:
  static constexpr unsigned kMaxM = 16;

  explicit FieldCtx(unsigned m = 1);
  FieldCtx(unsigned m, std::uint64_t modulus);

  static std::uint64_t default_modulus(unsigned m);

  unsigned m() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << m_; }
  bool valid(Fq a) const { return a < size(); }

  Fq add(Fq a, Fq b) const { return a ^ b; }
  Fq mul(Fq a, Fq b) const;
  // Carry-less multiply and reduce; reference for the table path.
  Fq mul_clmul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const;
  // Smallest element (numeric order) generating the multiplicative group.
  Fq generator() const { return generator_; }

  bool operator==(const FieldCtx& o) const { return m_ == o.m_ && modulus_ == o.modulus_; }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<Fq> exp;  // doubled length, no modular index reduction
  };

  unsigned m_;
  std::uint64_t modulus_;
  Fq generator_ = 1;
  std::shared_ptr<const Tables> tables_;
};

inline Fq fq_mul(Fq a, Fq b, const FieldCtx& ctx) { return ctx.mul(a, b); }
inline Fq fq_inv(Fq a, const FieldCtx& ctx) { return ctx.inv(a); }

// Dense univariate polynomial over F_{2^m}; c[i] is the coefficient of x^i.
struct Poly {
  std::vector<Fq> c;

  Poly() = default;
  explicit Poly(std::vector<Fq> coeffs) : c(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<Fq> coeffs) : c(coeffs) { normalize(); }

  static Poly constant(Fq a) { return Poly(std::vector<Fq>{a}); }
  static Poly monomial(std::size_t deg, Fq a = 1);
  // x + a
  static Poly linear(Fq a) { return Poly({a, 1}); }

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  Fq coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  Fq lead() const { return c.empty() ? 0 : c.back(); }
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const Poly& o) const = default;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& ctx, const Poly& a, Fq s);
Poly poly_mul(const FieldCtx& ctx, const Poly& a, const Poly& b);
// a = q*b + r with deg r < deg b.
void poly_divmod(const FieldCtx& ctx, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_div(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly poly_mod(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly poly_mulmod(const FieldCtx& ctx, const Poly& a, const Poly& b, const Poly& mod);
Poly poly_powmod(const FieldCtx& ctx, const Poly& a, const Count& e, const Poly& mod);
Poly poly_monic(const FieldCtx& ctx, const Poly& a);
Fq poly_eval(const FieldCtx& ctx, const Poly& p, Fq x);
// x^e mod (x^len - 1) as a dense polynomial
Poly poly_shift_cyclic(const Poly& a, std::size_t e, std::size_t len);

struct ExtGcd {
  Poly gcd;
  Poly a;
  Poly b;
};
// a*f + b*g = gcd, gcd monic (zero only when f = g = 0).
ExtGcd poly_ext_gcd(const FieldCtx& ctx, const Poly& f, const Poly& g);

// x^{deg f} f(1/x)
Poly reciprocal(const Poly& f);

// Numeric order of the base-2^m digit string (coefficient of x^i is digit i).
bool canonical_less(const Poly& a, const Poly& b);

// Packing to/from a single word; requires (deg+1)*m <= 64.
std::uint64_t pack(const Poly& p, unsigned m);
Poly unpack(std::uint64_t w, unsigned m);

std::string poly_to_hex(const Poly& p, unsigned m);
Poly poly_from_hex(const std::string& hex, unsigned m);
std::string poly_to_string(const Poly& p);

bool is_irreducible(const FieldCtx& ctx, const Poly& f);

// Smallest element of F_{2^m}[x]/<f>, in numeric order, of order 2^{m deg f} - 1.
Poly find_primitive(const Poly& f, const FieldCtx& ctx);

// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t mul_order_mod(std::uint64_t a, std::uint64_t n);

}  // namespace sdcyc
