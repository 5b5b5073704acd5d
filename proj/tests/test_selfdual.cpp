#include <doctest.h>

#include <algorithm>
#include <set>

#include "sdcyc/oracle.hpp"
#include "sdcyc/selfdual.hpp"

using namespace sdcyc;

TEST_CASE("theta sets on x^15 - 1") {
  const Instance inst(15, FieldCtx(1), 2);
  using V = std::vector<std::vector<std::uint64_t>>;
  CHECK(ThetaSet(inst, 1, 1).members() == V{{0x3}});
  CHECK(ThetaSet(inst, 2, 1).members() == V{{0x3}, {0x8}, {0xb}});
  CHECK(ThetaSet(inst, 0, 1).members() == V{{0x1}});
  CHECK(ThetaSet(inst, 2, 2).size() == 3 * 4);
  CHECK_THROWS_AS(ThetaSet(inst, 3, 1), Error);  // not self-reciprocal
}

TEST_CASE("theta sets equal the exhaustive filter") {
  for (auto [n, m] : {std::pair{1, 1u}, {1, 2u}, {1, 4u}, {3, 1u}, {3, 2u}, {5, 1u}, {5, 2u}, {9, 1u}, {15, 1u}, {17, 1u}}) {
    const Instance inst(n, FieldCtx(m), 2);
    for (int j = 0; j < inst.fd.lambda; ++j) {
      for (int s = 1; inst.bits(j) * static_cast<unsigned>(s) <= 16; ++s) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(j);
        CAPTURE(s);
        const ThetaSet th(inst, j, s);
        const auto mem = th.members();
        CHECK(mem == theta_filter(inst, j, s));
        CHECK(Count(mem.size()) == th.size());
        for (const auto& w : mem) CHECK(th.contains(w));
      }
    }
  }
}

TEST_CASE("theta sets do not depend on the primitive element") {
  const Instance inst(17, FieldCtx(1), 2);
  for (int j = 1; j < inst.fd.lambda; ++j) {
    const ResidueField& F = inst.comps.field(j);
    const std::uint64_t order = (1ull << F.bits()) - 1;
    const auto base = ThetaSet(inst, j, 1).members();
    int tried = 0;
    for (std::uint64_t g = 2; g <= order && tried < 4; ++g) {
      bool primitive = true;
      for (std::uint64_t p : prime_factors(order)) primitive = primitive && F.pow(g, order / p) != 1;
      if (!primitive) continue;
      ++tried;
      CHECK(ThetaSet(inst, j, 1, g).members() == base);
    }
    CHECK(tried > 1);
  }
}

TEST_CASE("theta members are fixed by omega prime") {
  const Instance inst(9, FieldCtx(2), 2);
  for (int j = 0; j < inst.fd.lambda; ++j) {
    const ThetaSet th(inst, j, 1);
    for (const auto& w : th.members()) CHECK(inst.comps.omega_prime(j, w[0]) == w[0]);
  }
}

TEST_CASE("self-dual counts") {
  const FieldCtx F2(1);
  CHECK(count_selfdual(factor_xn_minus_1(15, F2), 2) == 945);
  CHECK(count_selfdual(factor_xn_minus_1(3, F2), 2) == 9);
  CHECK(count_selfdual(factor_xn_minus_1(7, F2), 2) == 39);
  CHECK(count_selfdual(factor_xn_minus_1(1, F2), 2) == 3);
  CHECK(count_selfdual(factor_xn_minus_1(1, FieldCtx(2)), 2) == 5);
}

TEST_CASE("mate is an involution") {
  for (auto [n, m, k] : {std::tuple{7, 1u, 2}, {7, 1u, 3}, {3, 1u, 4}, {5, 1u, 5}, {3, 2u, 3}}) {
    const Instance inst(n, FieldCtx(m), k);
    for (int j = 0; j < inst.r(); ++j) {
      const IdealCatalog cat(j, inst.bits(j), k);
      for (Count i = 0; i < cat.size(); i += 1 + cat.size() / 300) {
        const IdealLabel L = cat.at(i);
        const IdealLabel M = mate_label(L, inst);
        CHECK_NOTHROW(validate_label(M, k, inst.bits(M.j)));
        CHECK(M.j == inst.fd.rho(j));
        CHECK(mate_label(M, inst) == L);
        CHECK(ideal_log_q_size(L, k) + ideal_log_q_size(M, k) == 2 * k);
      }
    }
  }
}

TEST_CASE("enumerator size equals the mass formula and codes are distinct") {
  for (auto [n, m, k] : {std::tuple{15, 1u, 2}, {7, 1u, 3}, {3, 2u, 2}, {5, 1u, 4}, {9, 1u, 2}, {1, 3u, 5}}) {
    const Instance inst(n, FieldCtx(m), k);
    const auto all = enumerate_selfdual(inst);
    CHECK(Count(all.size()) == count_selfdual(inst));
    CHECK(std::set<CyclicCode>(all.begin(), all.end()).size() == all.size());
    for (const CyclicCode& c : all) CHECK(is_self_dual(c, inst));
    const SelfDualEnumerator e(inst);
    for (Count i = 0; i < e.size(); i += 1 + e.size() / 50) CHECK(e.at(i) == all[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("enumerated codes are self-dual by brute force") {
  for (auto [n, m, k] : {std::tuple{1, 1u, 2}, {1, 1u, 3}, {1, 1u, 4}, {3, 1u, 2}, {1, 2u, 2}, {3, 1u, 3}, {5, 1u, 2}}) {
    const Instance inst(n, FieldCtx(m), k);
    for (const CyclicCode& c : enumerate_selfdual(inst)) CHECK(brute_is_selfdual(code_span(c, inst)));
  }
}

TEST_CASE("closed lists reproduce the enumeration") {
  for (auto [n, m, k] : {std::tuple{1, 1u, 2}, {3, 1u, 2}, {7, 1u, 2}, {15, 1u, 2}, {3, 2u, 2}, {1, 1u, 3}, {3, 1u, 4},
                         {7, 1u, 5}, {5, 2u, 3}}) {
    const Instance inst(n, FieldCtx(m), k);
    auto a = k == 2 ? selfdual_k2_list(inst) : selfdual_k345_list(inst);
    auto b = enumerate_selfdual(inst);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("self-dual codes have half the ambient size") {
  const Instance inst(7, FieldCtx(1), 3);
  const SelfDualEnumerator e(inst);
  const unsigned half = static_cast<unsigned>(inst.k) * 2u * static_cast<unsigned>(inst.n) * inst.m() / 2;
  e.for_each([&](const CyclicCode& c) {
    CHECK(code_log2_size(c, inst) == half);
    return true;
  });
}

TEST_CASE("streaming ranges") {
  const Instance inst(15, FieldCtx(1), 2);
  const SelfDualEnumerator e(inst);
  std::vector<CyclicCode> part;
  e.for_range(100, 110, [&](const CyclicCode& c) {
    part.push_back(c);
    return true;
  });
  REQUIRE(part.size() == 10);
  for (int i = 0; i < 10; ++i) CHECK(part[static_cast<std::size_t>(i)] == e.at(100 + i));
  int n = 0;
  e.for_each([&](const CyclicCode&) { return ++n < 5; });
  CHECK(n == 5);
}
