#pragma once

#include <cstdint>
#include <vector>

#include "sdcyc/gf.hpp"

namespace sdcyc {

using Coset = std::vector<std::uint64_t>;

// Orbits of {0..n-1} under multiplication by 2^m, ordered by least element.
std::vector<Coset> cyclotomic_cosets(std::uint64_t n, unsigned m);

// Ordered factorization x^n - 1 = f_1 ... f_r over F_{2^m}. Indices are 0-based:
// [0, lambda) self-reciprocal with f_0 = x - 1, then [lambda, lambda+epsilon) the
// smaller member of each reciprocal pair, then the mates at j + epsilon.
struct FactorData {
  int n = 1;
  FieldCtx field;
  std::vector<Poly> factors;
  std::vector<int> degrees;
  int lambda = 0;
  int epsilon = 0;
  std::vector<Fq> delta;  // reciprocal(f_j) = delta_j * f_rho(j)
  std::vector<Coset> cosets;

  int r() const { return static_cast<int>(factors.size()); }
  int rho(int j) const {
    if (j < lambda) return j;
    return j < lambda + epsilon ? j + epsilon : j - epsilon;
  }
  bool self_reciprocal(int j) const { return j < lambda; }
  bool pair_first(int j) const { return j >= lambda && j < lambda + epsilon; }
  int degree(int j) const { return degrees.at(static_cast<std::size_t>(j)); }
  const Poly& factor(int j) const { return factors.at(static_cast<std::size_t>(j)); }
  // x^{2n} - 1
  Poly ambient_modulus() const { return poly_add(Poly::monomial(2 * static_cast<std::size_t>(n)), Poly::constant(1)); }
};

FactorData factor_xn_minus_1(int n, const FieldCtx& ctx);

struct Idempotents {
  std::vector<Poly> eps;  // each reduced mod x^{2n} - 1
};

Idempotents compute_idempotents(const FactorData& fd);

}  // namespace sdcyc
