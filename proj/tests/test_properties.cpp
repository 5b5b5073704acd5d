#include <doctest.h>

#include <random>

#include "sdcyc/duality.hpp"
#include "sdcyc/gray.hpp"
#include "sdcyc/oracle.hpp"

using namespace sdcyc;

namespace {

Count random_index(std::mt19937_64& rng, const Count& size) {
  Count r = 0;
  for (int i = 0; i < 4; ++i) r = (r << 64) + rng();
  return r % size;
}

}  // namespace

TEST_CASE("sampled duals and hulls match the oracle on larger ambients") {
  std::mt19937_64 rng(20240611);
  for (auto [n, m] : {std::pair{9, 1u}, {15, 1u}, {5, 2u}, {7, 2u}, {21, 1u}}) {
    CAPTURE(n);
    CAPTURE(m);
    const Instance inst(n, FieldCtx(m), 2);
    const CyclicCodeSpace all(inst);
    for (int it = 0; it < 200; ++it) {
      const CyclicCode c = all.at(random_index(rng, all.size()));
      const CyclicCode d = dual_code(c, inst);
      CHECK(dual_code(d, inst) == c);
      CHECK(hull(c, inst) == hull(d, inst));
      CHECK(hull(c, inst) == hull_by_meet(c, inst));
      CHECK(code_dimension(c, inst) + code_dimension(d, inst) == 4 * n);
      if (2u * 2u * static_cast<unsigned>(n) * m <= 64) {
        const DenseCode dc = code_span(c, inst);
        const DenseCode bd = brute_dual(dc);
        CHECK(code_span(d, inst) == bd);
        CHECK(code_span(hull(c, inst), inst) == brute_intersect(dc, bd));
      }
    }
  }
}

TEST_CASE("sampled self-dual codes over larger ambients") {
  std::mt19937_64 rng(77);
  for (auto [n, m, k] : {std::tuple{15, 1u, 2}, {9, 2u, 2}, {21, 1u, 3}, {7, 2u, 4}, {31, 1u, 2}, {5, 4u, 3}}) {
    const Instance inst(n, FieldCtx(m), k);
    const SelfDualEnumerator e(inst);
    CHECK(e.size() == count_selfdual(inst));
    for (int it = 0; it < 40; ++it) {
      const CyclicCode c = e.at(random_index(rng, e.size()));
      CHECK(is_self_dual(c, inst));
      if (static_cast<unsigned>(k) * 2u * static_cast<unsigned>(n) * m <= 64) {
        const DenseCode dc = code_span(c, inst);
        CHECK(brute_is_selfdual(dc));
      }
      if (k == 2) {
        CHECK(is_self_orthogonal(c, inst));
        CHECK(dual_code(c, inst) == c);
      }
    }
  }
}

TEST_CASE("sampled self-orthogonal codes are contained in their duals") {
  std::mt19937_64 rng(4);
  for (auto [n, m] : {std::pair{15, 1u}, {7, 2u}, {5, 2u}}) {
    const Instance inst(n, FieldCtx(m), 2);
    const SelfOrthogonalEnumerator e(inst);
    for (int it = 0; it < 100; ++it) {
      const CyclicCode c = e.at(random_index(rng, e.size()));
      CHECK(hull(c, inst) == c);
      const DenseCode dc = code_span(c, inst);
      CHECK(brute_dual(dc).sub.contains(dc.sub));
    }
  }
}

TEST_CASE("gray images of sampled codes are 2-quasi-cyclic and keep the hull") {
  std::mt19937_64 rng(31);
  const Instance inst(9, FieldCtx(1), 2);
  const CyclicCodeSpace all(inst);
  for (int it = 0; it < 60; ++it) {
    const CyclicCode c = all.at(random_index(rng, all.size()));
    const FqMatrix g = span_generator_matrix(c, inst);
    CHECK(fq_rank(inst.field, g) == code_dimension(c, inst));
    CHECK(is_2_quasi_cyclic(g, inst.field));
    const FqMatrix h = fq_intersect(inst.field, g, fq_nullspace(inst.field, g));
    CHECK(fq_same_row_space(inst.field, h, span_generator_matrix(hull(c, inst), inst)));
  }
}
