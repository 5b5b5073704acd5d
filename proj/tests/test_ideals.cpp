#include <doctest.h>

#include <set>

#include "sdcyc/ideals.hpp"
#include "sdcyc/oracle.hpp"

using namespace sdcyc;

TEST_CASE("ideal counts over F_2") {
  const std::vector<int> L{7, 13, 23, 37, 59, 89, 135, 197};
  for (int k = 2; k <= 9; ++k) CHECK(count_ideals(2, k) == L[static_cast<std::size_t>(k - 2)]);
}

TEST_CASE("all counting forms agree") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 32, 256}) {
    for (int k = 2; k <= 12; ++k) {
      CAPTURE(q);
      CAPTURE(k);
      const Count s = count_ideals_sum(q, k);
      CHECK(count_ideals_closed(q, k) == s);
      CHECK(count_ideals_by_shape(q, k) == s);
      if (k <= 5) CHECK(count_ideals_small_k(q, k) == s);
    }
  }
  // small-k polynomials in q
  const Count q = 1024;
  CHECK(count_ideals(q, 2) == 5 + q);
  CHECK(count_ideals(q, 3) == 7 + 3 * q);
}

TEST_CASE("count arguments are checked") {
  CHECK_THROWS_AS(count_ideals(1, 3), Error);
  CHECK_THROWS_AS(count_ideals(2, 1), Error);
  CHECK_THROWS_AS(count_ideals_small_k(2, 6), Error);
}

TEST_CASE("catalog matches the count and lists distinct valid labels") {
  for (unsigned bits : {1u, 2u, 3u, 4u}) {
    for (int k = 2; k <= 5; ++k) {
      const IdealCatalog cat(0, bits, k);
      CHECK(cat.size() == count_ideals(Count(1) << bits, k));
      std::set<IdealLabel> seen;
      cat.for_each([&](const IdealLabel& L) {
        CHECK_NOTHROW(validate_label(L, k, bits));
        seen.insert(L);
      });
      CHECK(Count(seen.size()) == cat.size());
      for (Count i = 0; i < cat.size(); i += 7) CHECK(seen.count(cat.at(i)) == 1);
    }
  }
}

TEST_CASE("shape counts") {
  const IdealCatalog cat(0, 1, 2);
  CHECK(cat.shape_count(Shape::UPow) == 3);
  CHECK(cat.shape_count(Shape::UsF) == 2);
  CHECK(cat.shape_count(Shape::MixedOne) == 1);
  CHECK(cat.shape_count(Shape::TwoGen) == 1);
  CHECK(cat.shape_count(Shape::MixedTwo) == 0);
  CHECK(cat.shape_count(Shape::TwoGenOmega) == 0);
}

TEST_CASE("label validation rejects out-of-range parameters") {
  CHECK_THROWS_AS(validate_label(make_upow(0, 3), 2, 1), Error);
  CHECK_THROWS_AS(validate_label(make_usf(0, 2), 2, 1), Error);
  IdealLabel bad{0, Shape::MixedOne, 1, 0, 0, {0}};  // omega must be a unit
  CHECK_THROWS_AS(validate_label(bad, 2, 1), Error);
  IdealLabel wide{0, Shape::MixedOne, 1, 0, 0, {4}};  // not in F_2
  CHECK_THROWS_AS(validate_label(wide, 2, 1), Error);
  CHECK_NOTHROW(validate_label(IdealLabel{0, Shape::MixedOne, 1, 0, 0, {1}}, 2, 1));
}

TEST_CASE("unit indexing") {
  CHECK(unit_count(2, 1) == 3);
  CHECK(unit_count(2, 3) == 3 * 16);
  std::set<std::vector<std::uint64_t>> seen;
  for (Count i = 0; i < unit_count(2, 2); ++i) {
    const auto w = unit_at(i, 2, 2);
    CHECK(w.size() == 2);
    CHECK(w[0] != 0);
    seen.insert(w);
  }
  CHECK(seen.size() == 12);
}

TEST_CASE("label sizes match explicit member sets") {
  for (auto [n, m, k] : {std::tuple{1, 1u, 2}, {1, 1u, 3}, {1, 1u, 4}, {3, 1u, 2}, {1, 2u, 2}, {3, 1u, 3}}) {
    const Instance inst(n, FieldCtx(m), k);
    for (int j = 0; j < inst.r(); ++j) {
      std::set<std::vector<Word>> sets;
      for (const IdealLabel& L : enumerate_ideals(j, k, inst)) {
        const std::vector<Word> mem = ideal_members(L, inst);
        CHECK(mem.size() == (std::size_t{1} << (inst.bits(j) * static_cast<unsigned>(ideal_log_q_size(L, k)))));
        sets.insert(mem);
      }
      CHECK(Count(sets.size()) == count_ideals(Count(1) << inst.bits(j), k));
    }
  }
}

TEST_CASE("component enumeration equals the brute-force ideal census") {
  for (auto [n, m, k] : {std::tuple{1, 1u, 2}, {1, 1u, 3}, {1, 1u, 4}, {1, 1u, 5}, {3, 1u, 2}, {1, 2u, 2}, {1, 2u, 3}}) {
    CAPTURE(n);
    CAPTURE(k);
    const Instance inst(n, FieldCtx(m), k);
    for (int j = 0; j < inst.r(); ++j) {
      const auto space = component_space(inst, j);
      std::set<std::vector<Word>> brute, listed;
      for (const DenseCode& c : brute_all_ideals(space)) brute.insert(c.sub.basis());
      for (const IdealLabel& L : enumerate_ideals(j, k, inst)) listed.insert(ideal_span(L, inst).sub.basis());
      CHECK(brute == listed);
    }
  }
}

TEST_CASE("code space and code spans") {
  const Instance inst(3, FieldCtx(1), 2);
  const CyclicCodeSpace all(inst);
  CHECK(all.size() == 7 * 9);
  std::set<std::vector<Word>> spans;
  for (Count i = 0; i < all.size(); ++i) {
    const CyclicCode c = all.at(i);
    CHECK_NOTHROW(validate_code(c, inst));
    const DenseCode d = code_span(c, inst);
    CHECK(d.log2_size() == code_log2_size(c, inst));
    spans.insert(d.sub.basis());
  }
  CHECK(spans.size() == 63);
}

TEST_CASE("code validation") {
  const Instance inst(3, FieldCtx(1), 2);
  CyclicCode c = make_code(inst, {make_upow(0, 1), make_upow(1, 1)});
  CHECK_NOTHROW(validate_code(c, inst));
  c.components.pop_back();
  CHECK_THROWS_AS(validate_code(c, inst), Error);
  CyclicCode wrong_k = make_code(inst, {make_upow(0, 1), make_upow(1, 1)});
  wrong_k.k = 3;
  CHECK_THROWS_AS(validate_code(wrong_k, inst), Error);
}
