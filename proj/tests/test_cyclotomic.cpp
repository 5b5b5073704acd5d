#include <doctest.h>

#include "sdcyc/cyclotomic.hpp"

using namespace sdcyc;

TEST_CASE("cosets of 15 under doubling") {
  const auto cs = cyclotomic_cosets(15, 1);
  REQUIRE(cs.size() == 5);
  CHECK(cs[0] == Coset{0});
  CHECK(cs[1] == Coset{1, 2, 4, 8});
  CHECK(cs[2] == Coset{3, 6, 12, 9});
  CHECK(cs[3] == Coset{5, 10});
  CHECK(cs[4] == Coset{7, 14, 13, 11});
  CHECK(cyclotomic_cosets(15, 2).size() == 9);  // {0} {5} {10} and six pairs
}

TEST_CASE("x^15 - 1 over F_2") {
  const FactorData fd = factor_xn_minus_1(15, FieldCtx(1));
  REQUIRE(fd.r() == 5);
  CHECK(fd.lambda == 3);
  CHECK(fd.epsilon == 1);
  CHECK(fd.degrees == std::vector<int>{1, 2, 4, 4, 4});
  CHECK(fd.factor(0) == (Poly{1, 1}));
  CHECK(fd.factor(1) == (Poly{1, 1, 1}));
  CHECK(fd.factor(2) == (Poly{1, 1, 1, 1, 1}));
  CHECK(fd.factor(3) == (Poly{1, 1, 0, 0, 1}));
  CHECK(fd.factor(4) == (Poly{1, 0, 0, 1, 1}));
  CHECK(fd.rho(3) == 4);
  CHECK(fd.rho(4) == 3);
  CHECK(fd.delta[3] == 1);
}

TEST_CASE("factorization invariants over many instances") {
  for (unsigned m : {1u, 2u, 3u}) {
    const FieldCtx F(m);
    for (int n = 1; n <= 45; n += 2) {
      CAPTURE(n);
      CAPTURE(m);
      const FactorData fd = factor_xn_minus_1(n, F);
      Poly prod = Poly::constant(1), once = Poly::constant(1);
      for (int j = 0; j < fd.r(); ++j) {
        const Poly& f = fd.factor(j);
        CHECK(f.lead() == 1);
        CHECK(is_irreducible(F, f));
        CHECK(f.degree() == static_cast<int>(fd.cosets[static_cast<std::size_t>(j)].size()));
        prod = poly_mul(F, prod, poly_mul(F, f, f));
        once = poly_mul(F, once, f);
        CHECK(reciprocal(f) == poly_scale(F, fd.factor(fd.rho(j)), fd.delta[static_cast<std::size_t>(j)]));
        if (j < fd.lambda) CHECK(fd.delta[static_cast<std::size_t>(j)] == 1);
        CHECK(fd.rho(fd.rho(j)) == j);
      }
      CHECK(prod == fd.ambient_modulus());
      CHECK(once == poly_add(Poly::monomial(static_cast<std::size_t>(n)), Poly::constant(1)));
      CHECK(fd.factor(0) == Poly::linear(1));
      CHECK(fd.lambda + 2 * fd.epsilon == fd.r());
    }
  }
}

TEST_CASE("idempotents are orthogonal and complete") {
  for (auto [n, m] : {std::pair{15, 1u}, {7, 1u}, {9, 2u}, {21, 1u}, {5, 3u}}) {
    const FieldCtx F(m);
    const FactorData fd = factor_xn_minus_1(n, F);
    const Idempotents id = compute_idempotents(fd);
    const Poly big = fd.ambient_modulus();
    Poly sum;
    for (int j = 0; j < fd.r(); ++j) {
      const Poly& e = id.eps[static_cast<std::size_t>(j)];
      CHECK(poly_mulmod(F, e, e, big) == e);
      for (int l = 0; l < fd.r(); ++l) {
        const Poly fl2 = poly_mul(F, fd.factor(l), fd.factor(l));
        // eps_j = 1 mod f_j^2, 0 mod f_l^2 otherwise
        CHECK(poly_mod(F, e, fl2) == (l == j ? Poly::constant(1) : Poly{}));
        if (l > j) CHECK(poly_mulmod(F, e, id.eps[static_cast<std::size_t>(l)], big).is_zero());
      }
      sum = poly_add(sum, e);
    }
    CHECK(sum.is_one());
  }
}

TEST_CASE("x^15 - 1 idempotent for the linear factor") {
  const FactorData fd = factor_xn_minus_1(15, FieldCtx(1));
  const Idempotents id = compute_idempotents(fd);
  Poly e1;
  for (int i = 0; i <= 28; i += 2) e1 = poly_add(e1, Poly::monomial(static_cast<std::size_t>(i)));
  CHECK(id.eps[0] == e1);
}

TEST_CASE("even or non-positive n is rejected") {
  CHECK_THROWS_AS(factor_xn_minus_1(4, FieldCtx(1)), Error);
  CHECK_THROWS_AS(factor_xn_minus_1(0, FieldCtx(1)), Error);
  try {
    factor_xn_minus_1(6, FieldCtx(1));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EvenN);
  }
}
