#include <doctest.h>

#include <set>

#include "sdcyc/ideals.hpp"
#include "sdcyc/instance.hpp"

using namespace sdcyc;

TEST_CASE("residue field sizes and inverses") {
  const FieldCtx F2(1);
  for (const Poly& f : {Poly{1, 1, 1}, Poly{1, 1, 0, 1}, Poly{1, 1, 1, 1, 1}}) {
    const ResidueField K(F2, f);
    const std::uint64_t q = 1ull << K.bits();
    CHECK(K.order() == q);
    std::set<std::uint64_t> seen;
    for (std::uint64_t a = 1; a < q; ++a) {
      CHECK(K.mul(a, K.inv(a)) == 1);
      CHECK(K.pow(a, q - 1) == 1);
      seen.insert(K.inv(a));
    }
    CHECK(seen.size() == q - 1);
  }
  const ResidueField K4(FieldCtx(2), Poly{2, 1, 1});
  CHECK(K4.bits() == 4);
  for (std::uint64_t a = 1; a < 16; ++a) CHECK(K4.mul(a, K4.inv(a)) == 1);
  CHECK_THROWS_AS(K4.inv(0), Error);
}

TEST_CASE("unit counts by exhaustion") {
  const FieldCtx F2(1);
  for (const Poly& f : {Poly{1, 1}, Poly{1, 1, 1}}) {
    const Poly f2 = poly_mul(F2, f, f);
    const auto base = std::make_shared<const ResidueRing>(F2, f2);
    const int d = f2.degree();
    for (int s = 1; s <= 2; ++s) {
      const unsigned bits = static_cast<unsigned>(d * s);
      auto elem = [&](std::uint64_t w) {
        std::vector<Poly> c;
        for (int l = 0; l < s; ++l) c.push_back(unpack((w >> (l * d)) & ((1ull << d) - 1), 1));
        return UElem(base, c);
      };
      std::uint64_t units = 0;
      for (std::uint64_t a = 0; a < (1ull << bits); ++a) {
        for (std::uint64_t b = 0; b < (1ull << bits); ++b) {
          const UElem p = u_mul(elem(a), elem(b));
          bool one = p.coeffs()[0].is_one();
          for (int l = 1; l < s; ++l) one = one && p.coeffs()[static_cast<std::size_t>(l)].is_zero();
          if (one) {
            ++units;
            break;
          }
        }
      }
      // |(K_j[u]/<u^s>)^x| = (q - 1) q^{2s - 1}, q = 2^{d_j}
      const std::uint64_t q = 1ull << f.degree();
      std::uint64_t expect = q - 1;
      for (int e = 0; e < 2 * s - 1; ++e) expect *= q;
      CHECK(units == expect);
    }
  }
}

TEST_CASE("u-adic arithmetic truncates at u^s") {
  const FieldCtx F2(1);
  const auto base = std::make_shared<const ResidueRing>(F2, Poly{1, 0, 1});
  const UElem a(base, {Poly{1}, Poly{1}});     // 1 + u
  const UElem b(base, {Poly{1}, Poly{0, 1}});  // 1 + x u
  const UElem p = u_mul(a, b);
  CHECK(p.coeffs()[0] == Poly{1});
  CHECK(p.coeffs()[1] == (Poly{1, 1}));
  CHECK(u_add(a, a).coeffs()[0].is_zero());
}

TEST_CASE("kj split") {
  const FieldCtx F2(1);
  const Poly f{1, 1, 1};
  const Poly a{1, 0, 1, 1};  // 1 + x^2 + x^3
  const auto [a0, a1] = kj_split(F2, a, f);
  CHECK(a0.degree() < 2);
  CHECK(a1.degree() < 2);
  CHECK(poly_add(a0, poly_mul(F2, a1, f)) == a);
}

TEST_CASE("omega prime on the reciprocal pair of x^15 - 1") {
  const Instance inst(15, FieldCtx(1), 2);
  // w = a + bx + cx^2 + dx^3 mod x^4 + x + 1 maps to
  // (a+b+d)x^3 + (a+c+d)x^2 + (b+d)x + a+c mod x^4 + x^3 + 1
  for (std::uint64_t w = 1; w < 16; ++w) {
    const unsigned a = w & 1, b = (w >> 1) & 1, c = (w >> 2) & 1, d = (w >> 3) & 1;
    const std::uint64_t expect = ((a ^ c)) | ((b ^ d) << 1) | ((a ^ c ^ d) << 2) | ((a ^ b ^ d) << 3);
    CHECK(inst.comps.omega_prime(3, w) == expect);
  }
}

TEST_CASE("omega prime is a bijection and fixes nothing it should not") {
  for (auto [n, m] : {std::pair{7, 1u}, {15, 1u}, {5, 2u}, {9, 1u}, {3, 2u}}) {
    const Instance inst(n, FieldCtx(m), 2);
    for (int j = 0; j < inst.r(); ++j) {
      const std::uint64_t q = 1ull << inst.bits(j);
      std::set<std::uint64_t> image;
      for (std::uint64_t a = 0; a < q; ++a) image.insert(inst.comps.omega_prime(j, a));
      CHECK(image.size() == q);
      for (std::uint64_t a = 0; a < q; ++a) {
        // hat is an involution up to moving between F_j and F_rho(j)
        CHECK(inst.comps.hat(inst.comps.rho(j), inst.comps.hat(j, a)) == a);
      }
    }
  }
}

TEST_CASE("two routes to x^{-1}") {
  const Instance inst(15, FieldCtx(1), 2);
  for (int j = 1; j < inst.fd.lambda; ++j) {
    CHECK(inst.comps.x_inverse(j) == inst.comps.x_inverse_frobenius(j));
    const ResidueField& K = inst.comps.field(j);
    CHECK(K.mul(K.x(), inst.comps.x_inverse(j)) == 1);
  }
}
