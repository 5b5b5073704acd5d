#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "sdcyc/cyclotomic.hpp"
#include "sdcyc/gf.hpp"

namespace sdcyc {

// F_{2^m}[x]/<g>, elements are reduced polynomials.
class ResidueRing {
 public:
  ResidueRing(FieldCtx ctx, Poly modulus);

  const FieldCtx& field() const { return ctx_; }
  const Poly& modulus() const { return mod_; }
  int degree() const { return mod_.degree(); }

  Poly reduce(const Poly& a) const { return poly_mod(ctx_, a, mod_); }
  Poly add(const Poly& a, const Poly& b) const { return poly_add(a, b); }
  Poly mul(const Poly& a, const Poly& b) const { return poly_mulmod(ctx_, a, b, mod_); }
  Poly pow(const Poly& a, const Count& e) const { return poly_powmod(ctx_, a, e, mod_); }
  Poly inv(const Poly& a) const;

  bool operator==(const ResidueRing& o) const { return ctx_ == o.ctx_ && mod_ == o.mod_; }

 private:
  FieldCtx ctx_;
  Poly mod_;
};

// Residue field F_j = F_{2^m}[x]/<f_j> with elements packed into one word
// (digit i, m bits wide, is the coefficient of x^i). Requires m*d <= 64.
class ResidueField {
 public:
  ResidueField(FieldCtx ctx, Poly f);

  const ResidueRing& ring() const { return ring_; }
  const FieldCtx& base() const { return ring_.field(); }
  int degree() const { return ring_.degree(); }
  unsigned bits() const { return bits_; }
  // 2^{m d} as a count
  Count order() const { return Count(1) << bits_; }

  std::uint64_t from_poly(const Poly& a) const { return pack(ring_.reduce(a), base().m()); }
  Poly to_poly(std::uint64_t a) const { return unpack(a, base().m()); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, const Count& e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t x() const { return from_poly(Poly::monomial(1)); }

 private:
  ResidueRing ring_;
  unsigned bits_;
};

// Truncated u-adic expansion b_0 + b_1 u + ... + b_{s-1} u^{s-1} over a residue ring.
class UElem {
 public:
  UElem(std::shared_ptr<const ResidueRing> base, std::vector<Poly> coeffs);

  const ResidueRing& base() const { return *base_; }
  const std::shared_ptr<const ResidueRing>& base_ptr() const { return base_; }
  std::size_t s() const { return coeffs_.size(); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  bool is_unit() const { return !coeffs_.empty() && !coeffs_[0].is_zero(); }

  bool operator==(const UElem& o) const { return *base_ == *o.base_ && coeffs_ == o.coeffs_; }

 private:
  std::shared_ptr<const ResidueRing> base_;
  std::vector<Poly> coeffs_;
};

UElem u_add(const UElem& a, const UElem& b);
UElem u_mul(const UElem& a, const UElem& b);
inline bool is_unit(const UElem& a) { return a.is_unit(); }

// a = alpha0 + alpha1 f with deg alpha_i < deg f, for a reduced mod f^2.
std::pair<Poly, Poly> kj_split(const FieldCtx& ctx, const Poly& a, const Poly& f);

// x^{-1} = x^{2n-1} inside F_{2^m}[x]/<g> for any g dividing x^{2n} - 1.
Poly x_inverse_mod(const ResidueRing& ring, int n);

// Per-instance residue fields and the hat / omega-prime maps between them.
class Components {
 public:
  explicit Components(const FactorData& fd);

  int r() const { return static_cast<int>(fields_.size()); }
  int rho(int j) const { return rho_[static_cast<std::size_t>(j)]; }
  int degree(int j) const { return fields_[static_cast<std::size_t>(j)].degree(); }
  const ResidueField& field(int j) const { return fields_.at(static_cast<std::size_t>(j)); }

  // x^{-1} in F_j computed as x^{n-1}.
  std::uint64_t x_inverse(int j) const { return xinv_[static_cast<std::size_t>(j)]; }
  // x^{-1} in F_j computed as x^{2^{m d_j / 2}}; only for self-reciprocal j with d_j even.
  std::uint64_t x_inverse_frobenius(int j) const;

  // a(x^{-1}) reduced in F_{rho(j)}.
  std::uint64_t hat(int j, std::uint64_t a) const;
  // delta_j x^{-d_j} a(x^{-1}) in F_{rho(j)}.
  std::uint64_t omega_prime(int j, std::uint64_t a) const;
  std::vector<std::uint64_t> hat(int j, const std::vector<std::uint64_t>& w) const;
  std::vector<std::uint64_t> omega_prime(int j, const std::vector<std::uint64_t>& w) const;

 private:
  int n_;
  std::vector<ResidueField> fields_;
  std::vector<int> rho_;
  std::vector<Fq> delta_;
  std::vector<std::uint64_t> xinv_;
  std::vector<std::uint64_t> xinv_d_;  // x^{-d_j} in F_{rho(j)}
};

// UElem-level hat and omega-prime; the result lives over F_{rho(j)}.
UElem hat(const UElem& w, const Components& comps, int j);
UElem omega_prime(const UElem& w, const Components& comps, int j);

}  // namespace sdcyc
