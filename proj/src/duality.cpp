#include "sdcyc/duality.hpp"

#include <stdexcept>

namespace sdcyc {

namespace {

void require_k2(int k) {
  if (k != 2) fail(ErrorKind::UnsupportedK, "duals and hulls are tabulated for k = 2 only");
}

// 0: <0>, 1: <uf>, 2: the middle layer, 3: <u, f>, 4: <1>
int level(K2Kind kind) {
  switch (kind) {
    case K2Kind::Zero: return 0;
    case K2Kind::UF: return 1;
    case K2Kind::U:
    case K2Kind::F:
    case K2Kind::UPlusF: return 2;
    case K2Kind::UAndF: return 3;
    case K2Kind::One: return 4;
  }
  return -1;
}

}  // namespace

const char* k2_kind_name(K2Kind kind) {
  switch (kind) {
    case K2Kind::Zero: return "0";
    case K2Kind::One: return "1";
    case K2Kind::U: return "u";
    case K2Kind::F: return "f";
    case K2Kind::UF: return "uf";
    case K2Kind::UPlusF: return "u+fw";
    case K2Kind::UAndF: return "u,f";
  }
  return "?";
}

K2Kind k2_kind(const IdealLabel& L) {
  switch (L.shape) {
    case Shape::UPow:
      if (L.i == 0) return K2Kind::One;
      if (L.i == 1) return K2Kind::U;
      if (L.i == 2) return K2Kind::Zero;
      break;
    case Shape::UsF:
      if (L.s == 0) return K2Kind::F;
      if (L.s == 1) return K2Kind::UF;
      break;
    case Shape::MixedOne:
      if (L.i == 1 && L.t == 0) return K2Kind::UPlusF;
      break;
    case Shape::TwoGen:
      if (L.i == 1 && L.s == 0) return K2Kind::UAndF;
      break;
    default: break;
  }
  fail(ErrorKind::UnsupportedK, "label is not an ideal of K_j[u]/<u^2>");
}

IdealLabel k2_label(int j, K2Kind kind, std::uint64_t w) {
  switch (kind) {
    case K2Kind::Zero: return make_upow(j, 2);
    case K2Kind::One: return make_upow(j, 0);
    case K2Kind::U: return make_upow(j, 1);
    case K2Kind::F: return make_usf(j, 0);
    case K2Kind::UF: return make_usf(j, 1);
    case K2Kind::UPlusF:
      if (w == 0) return make_upow(j, 1);
      return IdealLabel{j, Shape::MixedOne, 1, 0, 0, {w}};
    case K2Kind::UAndF: return IdealLabel{j, Shape::TwoGen, 1, 0, 0, {}};
  }
  throw std::logic_error("k2_label: unknown kind");
}

int k2_kappa(K2Kind kind) {
  switch (kind) {
    case K2Kind::Zero: return 0;
    case K2Kind::One: return 4;
    case K2Kind::U: return 2;
    case K2Kind::F: return 2;
    case K2Kind::UF: return 1;
    case K2Kind::UPlusF: return 2;
    case K2Kind::UAndF: return 3;
  }
  return 0;
}

bool k2_contains(const IdealLabel& big, const IdealLabel& small) {
  const int lb = level(k2_kind(big)), ls = level(k2_kind(small));
  if (ls == 0 || lb == 4) return true;
  if (lb == 2 && ls == 2) return big == small;
  return lb >= ls;
}

IdealLabel k2_meet(const IdealLabel& a, const IdealLabel& b) {
  if (a.j != b.j) fail(ErrorKind::BaseMismatch, "meet of ideals in different components");
  if (k2_contains(a, b)) return b;
  if (k2_contains(b, a)) return a;
  return k2_label(a.j, K2Kind::UF);  // two distinct middle ideals
}

IdealLabel dual_component(const IdealLabel& L, const Instance& inst) {
  require_k2(inst.k);
  const int t = inst.fd.rho(L.j);
  switch (k2_kind(L)) {
    case K2Kind::Zero: return k2_label(t, K2Kind::One);
    case K2Kind::One: return k2_label(t, K2Kind::Zero);
    case K2Kind::U: return k2_label(t, K2Kind::U);
    case K2Kind::F: return k2_label(t, K2Kind::F);
    case K2Kind::UF: return k2_label(t, K2Kind::UAndF);
    case K2Kind::UAndF: return k2_label(t, K2Kind::UF);
    case K2Kind::UPlusF: return k2_label(t, K2Kind::UPlusF, inst.comps.omega_prime(L.j, L.omega.at(0)));
  }
  throw std::logic_error("dual_component: unknown kind");
}

CyclicCode dual_code(const CyclicCode& code, const Instance& inst) {
  require_k2(inst.k);
  validate_code(code, inst);
  std::vector<IdealLabel> out(code.components.size());
  for (const IdealLabel& L : code.components) out[static_cast<std::size_t>(inst.fd.rho(L.j))] = dual_component(L, inst);
  return make_code(inst, std::move(out));
}

CyclicCode hull(const CyclicCode& code, const Instance& inst) {
  require_k2(inst.k);
  validate_code(code, inst);
  std::vector<IdealLabel> H(code.components.size());
  auto at = [&](int j) -> const IdealLabel& { return code.components[static_cast<std::size_t>(j)]; };
  auto set = [&](int j, K2Kind kind) { H[static_cast<std::size_t>(j)] = k2_label(j, kind); };
  auto put = [&](const IdealLabel& L) { H[static_cast<std::size_t>(L.j)] = L; };

  for (int j = 0; j < inst.fd.lambda; ++j) {
    const IdealLabel& c = at(j);
    switch (k2_kind(c)) {
      case K2Kind::Zero:
      case K2Kind::One: set(j, K2Kind::Zero); break;
      case K2Kind::UF:
      case K2Kind::UAndF: set(j, K2Kind::UF); break;
      case K2Kind::F:
      case K2Kind::U: put(c); break;
      case K2Kind::UPlusF:
        if (ThetaSet(inst, j, 1).contains_base(c.omega.at(0))) {
          put(c);
        } else {
          set(j, K2Kind::UF);
        }
        break;
    }
  }

  for (int j = inst.fd.lambda; j < inst.fd.lambda + inst.fd.epsilon; ++j) {
    const int jp = inst.fd.rho(j);
    const IdealLabel& c = at(j);
    const IdealLabel& cp = at(jp);
    const K2Kind b = k2_kind(cp);
    switch (k2_kind(c)) {
      case K2Kind::Zero:
        set(j, K2Kind::Zero);
        put(cp);
        break;
      case K2Kind::UF:
        if (b == K2Kind::One) {
          set(j, K2Kind::Zero);
          set(jp, K2Kind::UAndF);
        } else {
          set(j, K2Kind::UF);
          put(cp);
        }
        break;
      case K2Kind::F:
        switch (b) {
          case K2Kind::F: set(j, K2Kind::F); set(jp, K2Kind::F); break;
          case K2Kind::UAndF: set(j, K2Kind::UF); set(jp, K2Kind::F); break;
          case K2Kind::One: set(j, K2Kind::Zero); set(jp, K2Kind::F); break;
          case K2Kind::UF:
          case K2Kind::Zero: set(j, K2Kind::F); put(cp); break;
          case K2Kind::U:
          case K2Kind::UPlusF: set(j, K2Kind::UF); set(jp, K2Kind::UF); break;
        }
        break;
      case K2Kind::U:
      case K2Kind::UPlusF: {
        // <u + f w0> with w0 = 0 for <u>; its dual partner <u + f' w0'> sits at jp.
        const IdealLabel mate = dual_component(c, inst);
        if (cp == mate) {
          put(c);
          put(cp);
        } else if (b == K2Kind::UAndF) {
          set(j, K2Kind::UF);
          put(mate);
        } else if (b == K2Kind::One) {
          set(j, K2Kind::Zero);
          put(mate);
        } else if (b == K2Kind::UF || b == K2Kind::Zero) {
          put(c);
          put(cp);
        } else {
          set(j, K2Kind::UF);
          set(jp, K2Kind::UF);
        }
        break;
      }
      case K2Kind::UAndF:
        if (b == K2Kind::Zero) {
          put(c);
          set(jp, K2Kind::Zero);
        } else {
          put(dual_component(cp, inst));
          set(jp, K2Kind::UF);
        }
        break;
      case K2Kind::One:
        put(dual_component(cp, inst));
        set(jp, K2Kind::Zero);
        break;
    }
  }
  return make_code(inst, std::move(H));
}

CyclicCode hull_by_meet(const CyclicCode& code, const Instance& inst) {
  const CyclicCode d = dual_code(code, inst);
  std::vector<IdealLabel> H;
  for (std::size_t j = 0; j < code.components.size(); ++j) H.push_back(k2_meet(code.components[j], d.components[j]));
  return make_code(inst, std::move(H));
}

Count code_dimension(const CyclicCode& code, const Instance& inst) {
  require_k2(inst.k);
  Count dim = 0;
  for (const IdealLabel& L : code.components) dim += k2_kappa(k2_kind(L)) * inst.fd.degree(L.j);
  return dim;
}

Count hull_dimension(const CyclicCode& code, const Instance& inst) { return code_dimension(hull(code, inst), inst); }

bool is_self_orthogonal(const CyclicCode& code, const Instance& inst) { return hull(code, inst) == code; }

SelfOrthogonalEnumerator::SelfOrthogonalEnumerator(const Instance& inst) : inst_(&inst) {
  require_k2(inst.k);
  for (int j = 0; j < inst.fd.lambda; ++j) {
    const ThetaSet th(inst, j, 1);
    prod_.add(4 + th.size(), [th, j](const Count& idx, std::vector<IdealLabel>& comps) {
      static constexpr K2Kind fixed[] = {K2Kind::Zero, K2Kind::UF, K2Kind::F, K2Kind::U};
      comps[static_cast<std::size_t>(j)] =
          idx < 4 ? k2_label(j, fixed[static_cast<int>(idx)]) : k2_label(j, K2Kind::UPlusF, th.at(idx - 4).at(0));
    });
  }
  const Instance* ip = &inst;
  for (int j = inst.fd.lambda; j < inst.fd.lambda + inst.fd.epsilon; ++j) {
    const int jp = inst.fd.rho(j);
    const IdealCatalog cat(jp, inst.bits(jp), 2);
    const Count q = Count(1) << inst.bits(j);
    prod_.add(15 + 5 * q, [cat, q, j, jp, ip](const Count& idx, std::vector<IdealLabel>& comps) {
      IdealLabel& c = comps[static_cast<std::size_t>(j)];
      IdealLabel& cp = comps[static_cast<std::size_t>(jp)];
      Count r = idx;
      if (r < 5 + q) {
        c = k2_label(j, K2Kind::Zero);
        cp = cat.at(r);
        return;
      }
      r -= 5 + q;
      if (r < 4 + q) {
        c = k2_label(j, K2Kind::UF);
        cp = cat.at(r + 1);  // catalog entry 0 is <1>
        return;
      }
      r -= 4 + q;
      if (r < 3) {
        static constexpr K2Kind with_f[] = {K2Kind::F, K2Kind::UF, K2Kind::Zero};
        c = k2_label(j, K2Kind::F);
        cp = k2_label(jp, with_f[static_cast<int>(r)]);
        return;
      }
      r -= 3;
      if (r < 3 * q) {
        c = k2_label(j, K2Kind::UPlusF, static_cast<std::uint64_t>(r / 3));
        const int which = static_cast<int>(r % 3);
        cp = which == 0 ? dual_component(c, *ip) : k2_label(jp, which == 1 ? K2Kind::UF : K2Kind::Zero);
        return;
      }
      r -= 3 * q;
      // (<u, f>, <0>), (<u, f>, <uf>), (<1>, <0>)
      c = k2_label(j, r < 2 ? K2Kind::UAndF : K2Kind::One);
      cp = k2_label(jp, r == 1 ? K2Kind::UF : K2Kind::Zero);
    });
  }
  if (prod_.size() != count_selforthogonal(inst.fd)) {
    throw std::logic_error("self-orthogonal enumeration size disagrees with the mass formula");
  }
}

std::vector<CyclicCode> enumerate_selforthogonal(const Instance& inst) {
  SelfOrthogonalEnumerator e(inst);
  if (e.size() > Count(1) << 24) fail(ErrorKind::TooLarge, "more than 2^24 self-orthogonal codes; stream them instead");
  std::vector<CyclicCode> out;
  e.for_each([&](const CyclicCode& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Count count_selforthogonal(const FactorData& fd) {
  const unsigned m = fd.field.m();
  Count total = 1;
  for (int j = 0; j < fd.lambda; ++j) {
    const unsigned half = j == 0 ? m : m * static_cast<unsigned>(fd.degree(j)) / 2;
    total *= 3 + (Count(1) << half);
  }
  for (int j = fd.lambda; j < fd.lambda + fd.epsilon; ++j) {
    total *= 15 + 5 * (Count(1) << (m * static_cast<unsigned>(fd.degree(j))));
  }
  return total;
}

}  // namespace sdcyc
