#include <doctest.h>

#include <set>

#include "sdcyc/duality.hpp"
#include "sdcyc/oracle.hpp"

using namespace sdcyc;

namespace {

CyclicCode uniform(const Instance& inst, K2Kind kind) {
  std::vector<IdealLabel> c;
  for (int j = 0; j < inst.r(); ++j) c.push_back(k2_label(j, kind));
  return make_code(inst, c);
}

}  // namespace

TEST_CASE("k = 2 kinds and dimensions") {
  CHECK(k2_kind(make_upow(0, 2)) == K2Kind::Zero);
  CHECK(k2_kind(make_upow(0, 0)) == K2Kind::One);
  CHECK(k2_kind(make_upow(0, 1)) == K2Kind::U);
  CHECK(k2_kind(make_usf(0, 0)) == K2Kind::F);
  CHECK(k2_kind(make_usf(0, 1)) == K2Kind::UF);
  CHECK(k2_kind(k2_label(0, K2Kind::UPlusF, 1)) == K2Kind::UPlusF);
  CHECK(k2_kind(k2_label(0, K2Kind::UAndF)) == K2Kind::UAndF);
  CHECK(k2_label(0, K2Kind::UPlusF, 0) == make_upow(0, 1));
  const Instance inst(7, FieldCtx(1), 2);
  const auto kinds = {K2Kind::Zero, K2Kind::One, K2Kind::U, K2Kind::F, K2Kind::UF, K2Kind::UAndF};
  for (K2Kind kind : kinds) {
    const CyclicCode c = uniform(inst, kind);
    CHECK(code_log2_size(c, inst) == static_cast<unsigned>(k2_kappa(kind) * inst.n));
  }
}

TEST_CASE("lattice meet") {
  const IdealLabel f = k2_label(0, K2Kind::F), u = k2_label(0, K2Kind::U), uf = k2_label(0, K2Kind::UF),
                   both = k2_label(0, K2Kind::UAndF), one = k2_label(0, K2Kind::One), zero = k2_label(0, K2Kind::Zero);
  CHECK(k2_meet(f, u) == uf);
  CHECK(k2_meet(both, both) == both);
  CHECK(k2_meet(uf, uf) == uf);
  CHECK(k2_meet(one, f) == f);
  CHECK(k2_meet(zero, both) == zero);
  CHECK(k2_contains(both, u));
  CHECK_FALSE(k2_contains(f, u));
  CHECK_THROWS_AS(k2_meet(f, k2_label(1, K2Kind::F)), Error);
}

TEST_CASE("dual examples") {
  const Instance inst(7, FieldCtx(1), 2);
  CHECK(dual_code(uniform(inst, K2Kind::U), inst) == uniform(inst, K2Kind::U));
  CHECK(dual_code(uniform(inst, K2Kind::Zero), inst) == uniform(inst, K2Kind::One));
  const Instance one(1, FieldCtx(1), 2);
  CHECK(dual_code(uniform(one, K2Kind::F), one) == uniform(one, K2Kind::F));
  CHECK(hull_dimension(uniform(inst, K2Kind::U), inst) == 2 * inst.n);
  CHECK(hull_dimension(uniform(inst, K2Kind::One), inst) == 0);
  CHECK(is_self_orthogonal(uniform(inst, K2Kind::Zero), inst));
  CHECK_FALSE(is_self_orthogonal(uniform(inst, K2Kind::One), inst));
  const Instance k3(7, FieldCtx(1), 3);
  CHECK_THROWS_AS(dual_code(make_code(k3, {make_upow(0, 1), make_upow(1, 1), make_upow(2, 1)}), k3), Error);
}

TEST_CASE("dual and hull against the brute-force oracle, every cyclic code") {
  for (auto [n, m] : {std::pair{1, 1u}, {3, 1u}, {5, 1u}, {1, 2u}, {7, 1u}, {3, 2u}}) {
    const Instance inst(n, FieldCtx(m), 2);
    const CyclicCodeSpace all(inst);
    for (Count i = 0; i < all.size(); ++i) {
      const CyclicCode c = all.at(i);
      const DenseCode dc = code_span(c, inst);
      const DenseCode bd = brute_dual(dc);
      const CyclicCode d = dual_code(c, inst);
      REQUIRE(code_span(d, inst) == bd);
      const CyclicCode h = hull(c, inst);
      REQUIRE(code_span(h, inst) == brute_intersect(dc, bd));
      CHECK(h == hull_by_meet(c, inst));
      CHECK(dual_code(d, inst) == c);
      CHECK(hull(d, inst) == h);
      CHECK(code_dimension(c, inst) + code_dimension(d, inst) == 4 * n);
      CHECK(hull_dimension(c, inst) * m == code_log2_size(h, inst));
    }
  }
}

TEST_CASE("self-orthogonal enumeration equals the brute filter") {
  for (auto [n, m] : {std::pair{1, 1u}, {3, 1u}, {5, 1u}, {7, 1u}, {1, 2u}, {3, 2u}}) {
    const Instance inst(n, FieldCtx(m), 2);
    const CyclicCodeSpace all(inst);
    std::set<CyclicCode> filtered;
    for (Count i = 0; i < all.size(); ++i) {
      const CyclicCode c = all.at(i);
      if (is_self_orthogonal(c, inst)) filtered.insert(c);
    }
    const auto listed = enumerate_selforthogonal(inst);
    CHECK(std::set<CyclicCode>(listed.begin(), listed.end()) == filtered);
    CHECK(Count(listed.size()) == count_selforthogonal(inst.fd));
    for (const CyclicCode& c : enumerate_selfdual(inst)) CHECK(filtered.count(c) == 1);
  }
}

TEST_CASE("self-orthogonal counts") {
  const FieldCtx F2(1);
  CHECK(count_selforthogonal(factor_xn_minus_1(3, F2)) == 25);
  CHECK(count_selforthogonal(factor_xn_minus_1(5, F2)) == 35);
  CHECK(count_selforthogonal(factor_xn_minus_1(7, F2)) == 275);
  CHECK(count_selforthogonal(factor_xn_minus_1(1, FieldCtx(2))) == 7);
}

TEST_CASE("self-orthogonal pair (<u, f>, <uf>)") {
  const Instance inst(7, FieldCtx(1), 2);
  const CyclicCode c =
      make_code(inst, {k2_label(0, K2Kind::Zero), k2_label(1, K2Kind::UAndF), k2_label(2, K2Kind::UF)});
  CHECK(is_self_orthogonal(c, inst));
  const DenseCode dc = code_span(c, inst);
  CHECK(f2_intersect(dc.sub, brute_dual(dc).sub) == dc.sub);
}
