#include <doctest.h>

#include <random>

#include "sdcyc/duality.hpp"
#include "sdcyc/gray.hpp"
#include "sdcyc/oracle.hpp"

using namespace sdcyc;

TEST_CASE("gray map layout and lee weight") {
  // xi = (1 + x) + u x over length 3
  const auto v = gray_map({Poly{1, 1}, Poly{0, 1}}, 3);
  CHECK(v == std::vector<Fq>{0, 1, 0, 1, 0, 0});
  CHECK(lee_weight(0, 0) == 0);
  CHECK(lee_weight(1, 0) == 1);
  CHECK(lee_weight(0, 1) == 2);
  CHECK(lee_weight(1, 1) == 1);
  CHECK(lee_weight(2, 3) == 2);
  CHECK_THROWS_AS(gray_map({Poly{1}, Poly{}, Poly{1}}, 3), Error);
  CHECK_THROWS_AS(gray_map({Poly::monomial(3), Poly{}}, 3), Error);
}

TEST_CASE("gray map is linear and injective") {
  const auto sp = RingSpace::cyclic(FieldCtx(2), 1, 2);
  std::set<std::vector<Fq>> images;
  for (Word a = 0; a < (1u << sp->bits()); ++a) {
    const auto pa = gray_map(sp->decode(a), 2);
    images.insert(pa);
    for (Word b = 0; b < (1u << sp->bits()); b += 3) {
      const auto pb = gray_map(sp->decode(b), 2);
      auto sum = gray_map(sp->decode(a ^ b), 2);
      for (std::size_t i = 0; i < sum.size(); ++i) CHECK(sum[i] == (pa[i] ^ pb[i]));
    }
  }
  CHECK(images.size() == (1u << sp->bits()));
}

TEST_CASE("circulant rows") {
  const FqMatrix c = circulant(Poly{1, 1}, 3, 4);
  CHECK(c.row(0) == std::vector<Fq>{1, 1, 0, 0});
  CHECK(c.row(2) == std::vector<Fq>{0, 0, 1, 1});
  const FqMatrix w = circulant(Poly{1, 0, 0, 1}, 2, 4);
  CHECK(w.row(1) == std::vector<Fq>{1, 1, 0, 0});
}

TEST_CASE("block generator matrices of self-dual codes") {
  for (auto [n, m] : {std::pair{1, 1u}, {3, 1u}, {7, 1u}, {1, 2u}, {3, 2u}, {5, 1u}, {9, 1u}}) {
    const Instance inst(n, FieldCtx(m), 2);
    for (const CyclicCode& c : enumerate_selfdual(inst)) {
      const FqMatrix g = generator_matrix(c, inst);
      CHECK(g.cols == 4 * static_cast<std::size_t>(n));
      CHECK(fq_rank(inst.field, g) == 2 * static_cast<std::size_t>(n));
      CHECK(fq_is_zero(fq_mul_transpose(inst.field, g, g)));
      CHECK(is_2_quasi_cyclic(g, inst.field));
      CHECK(fq_same_row_space(inst.field, g, span_generator_matrix(c, inst)));
    }
  }
}

TEST_CASE("generator matrix refuses codes that are not self-dual") {
  const Instance inst(3, FieldCtx(1), 2);
  const CyclicCode c = make_code(inst, {k2_label(0, K2Kind::One), k2_label(1, K2Kind::One)});
  CHECK_THROWS_AS(generator_matrix(c, inst), Error);
  CHECK(fq_rank(inst.field, span_generator_matrix(c, inst)) == 12);
}

TEST_CASE("span generator matrix matches the oracle image for every code") {
  for (auto [n, m] : {std::pair{3, 1u}, {1, 2u}, {5, 1u}}) {
    const Instance inst(n, FieldCtx(m), 2);
    const CyclicCodeSpace all(inst);
    for (Count i = 0; i < all.size(); ++i) {
      const CyclicCode c = all.at(i);
      const FqMatrix g = span_generator_matrix(c, inst);
      CHECK(fq_same_row_space(inst.field, g, dense_generator_matrix(code_span(c, inst))));
      CHECK(is_2_quasi_cyclic(g, inst.field));
    }
  }
}

TEST_CASE("hull commutes with the gray map") {
  for (auto [n, m] : {std::pair{3, 1u}, {1, 2u}, {5, 1u}}) {
    const Instance inst(n, FieldCtx(m), 2);
    const CyclicCodeSpace all(inst);
    for (Count i = 0; i < all.size(); ++i) {
      const CyclicCode c = all.at(i);
      const FqMatrix g = span_generator_matrix(c, inst);
      const FqMatrix direct = fq_intersect(inst.field, g, fq_nullspace(inst.field, g));
      CHECK(fq_same_row_space(inst.field, direct, span_generator_matrix(hull(c, inst), inst)));
    }
  }
}

TEST_CASE("hamming distribution of the image equals the lee distribution") {
  for (auto [n, m] : {std::pair{1, 1u}, {3, 1u}, {1, 2u}, {5, 1u}, {3, 2u}}) {
    const Instance inst(n, FieldCtx(m), 2);
    for (const CyclicCode& c : enumerate_selfdual(inst)) {
      const WeightDist h = weight_distribution(generator_matrix(c, inst), inst.field);
      CHECK(h == lee_distribution(code_span(c, inst)));
      CHECK(h.total() == (std::uint64_t{1} << (2 * n * m)));
      if (m == 1) {
        for (std::size_t w = 1; w < h.counts.size(); w += 2) CHECK(h.counts[w] == 0);
      }
    }
  }
}

TEST_CASE("minimum distance") {
  const FieldCtx F2(1);
  FqMatrix rep(0, 5);
  rep.append_row({1, 1, 1, 1, 1});
  CHECK(min_distance(rep, F2) == 5);
  FqMatrix hamming(0, 7);
  hamming.append_row({1, 0, 0, 0, 1, 1, 0});
  hamming.append_row({0, 1, 0, 0, 1, 0, 1});
  hamming.append_row({0, 0, 1, 0, 0, 1, 1});
  hamming.append_row({0, 0, 0, 1, 1, 1, 1});
  const WeightDist wd = weight_distribution(hamming, F2);
  CHECK(wd.counts == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
  CHECK(min_distance(wd) == 3);
  CHECK_THROWS_AS(min_distance(FqMatrix(0, 4), F2), Error);
  // [4, 2, 3] over F_4
  const FieldCtx F4(2);
  FqMatrix rs(0, 4);
  rs.append_row({1, 0, 1, 1});
  rs.append_row({0, 1, 2, 3});
  CHECK(min_distance(rs, F4) == 3);
}

TEST_CASE("weight distribution is independent of isa and thread count") {
  std::mt19937_64 rng(99);
  for (unsigned m : {1u, 2u, 3u}) {
    const FieldCtx F(m);
    for (int it = 0; it < 6; ++it) {
      const std::size_t rows = 3 + rng() % (20 / m), cols = rows + 5 + rng() % 70;
      FqMatrix g(rows, cols);
      for (Fq& x : g.a) x = static_cast<Fq>(rng()) & (F.size() - 1);
      const WeightDist ref = weight_distribution(g, F, {kernels::Isa::Scalar, 1});
      CHECK(ref.total() == (std::uint64_t{1} << (m * fq_rank(F, g))));
      CHECK(weight_distribution(g, F, {kernels::Isa::Scalar, 3}) == ref);
      if (kernels::avx2_supported()) {
        CHECK(weight_distribution(g, F, {kernels::Isa::Avx2, 1}) == ref);
        CHECK(weight_distribution(g, F, {kernels::Isa::Avx2, 2}) == ref);
      }
    }
  }
}

TEST_CASE("message space cap") {
  const FieldCtx F2(1);
  FqMatrix g(33, 40);
  for (std::size_t i = 0; i < 33; ++i) g.at(i, i) = 1;
  CHECK_THROWS_AS(weight_distribution(g, F2), Error);
}
