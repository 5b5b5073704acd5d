#include "sdcyc/verify.hpp"

#include <algorithm>
#include <set>

#include "sdcyc/duality.hpp"
#include "sdcyc/gray.hpp"
#include "sdcyc/oracle.hpp"
#include "sdcyc/selfdual.hpp"

namespace sdcyc {

namespace {

std::vector<Word> basis_key(const DenseCode& c) { return c.sub.basis(); }

}  // namespace

std::vector<CheckResult> verify_instance(const Instance& inst, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  auto check = [&](const std::string& name, auto&& fn) {
    try {
      std::string detail;
      const bool ok = fn(detail);
      out.push_back({name, ok, detail});
    } catch (const Error& e) {
      out.push_back({name, e.kind() == ErrorKind::TooLarge, std::string("skipped: ") + e.what()});
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  };
  const FieldCtx& F = inst.field;
  const Poly big = inst.fd.ambient_modulus();

  check("factor-product", [&](std::string& d) {
    Poly p = Poly::constant(1);
    for (const Poly& f : inst.fd.factors) p = poly_mul(F, p, poly_mul(F, f, f));
    d = std::to_string(inst.r()) + " factors";
    return p == big;
  });

  check("idempotents", [&](std::string& d) {
    Poly sum;
    for (int j = 0; j < inst.r(); ++j) {
      const Poly& e = inst.idem.eps[static_cast<std::size_t>(j)];
      if (poly_mulmod(F, e, e, big) != e) return false;
      for (int l = j + 1; l < inst.r(); ++l) {
        if (!poly_mulmod(F, e, inst.idem.eps[static_cast<std::size_t>(l)], big).is_zero()) return false;
      }
      sum = poly_add(sum, e);
    }
    d = "orthogonal, complete";
    return sum.is_one();
  });

  SelfDualEnumerator sd(inst);
  check("selfdual-mass-formula", [&](std::string& d) {
    d = to_string(sd.size()) + " codes";
    return sd.size() == count_selfdual(inst);
  });

  check("selfdual-oracle", [&](std::string& d) {
    std::size_t seen = 0;
    bool ok = true;
    sd.for_each([&](const CyclicCode& c) {
      const DenseCode dc = code_span(c, inst);
      if (dc.log2_size() != code_log2_size(c, inst) || !brute_is_selfdual(dc)) ok = false;
      return ok && ++seen < opt.max_codes;
    });
    d = std::to_string(seen) + " codes checked";
    return ok;
  });

  if (inst.k >= 2 && inst.k <= 5) {
    check("closed-lists", [&](std::string& d) {
      std::vector<CyclicCode> a = inst.k == 2 ? selfdual_k2_list(inst) : selfdual_k345_list(inst);
      std::vector<CyclicCode> b = enumerate_selfdual(inst);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      d = std::to_string(a.size()) + " codes";
      return a == b;
    });
  }

  const unsigned ambient = static_cast<unsigned>(inst.k) * 2u * static_cast<unsigned>(inst.n) * inst.m();
  if (ambient <= opt.census_bits) {
    check("selfdual-census", [&](std::string& d) {
      std::set<std::vector<Word>> found, listed;
      for (const DenseCode& c : brute_all_ideals(RingSpace::cyclic(F, inst.n, inst.k))) {
        if (brute_is_selfdual(c)) found.insert(basis_key(c));
      }
      sd.for_each([&](const CyclicCode& c) {
        listed.insert(basis_key(code_span(c, inst)));
        return true;
      });
      d = std::to_string(found.size()) + " self-dual ideals by brute force";
      return found == listed;
    });
  }

  if (inst.k == 2) {
    check("dual-and-hull-oracle", [&](std::string& d) {
      CyclicCodeSpace all(inst);
      const Count total = all.size();
      const Count step = total > opt.max_codes ? total / opt.max_codes : Count(1);
      std::size_t seen = 0;
      for (Count idx = 0; idx < total; idx += step) {
        const CyclicCode c = all.at(idx);
        const DenseCode dc = code_span(c, inst);
        const DenseCode dual = brute_dual(dc);
        if (!(code_span(dual_code(c, inst), inst) == dual)) return false;
        const CyclicCode h = hull(c, inst);
        if (h != hull_by_meet(c, inst)) return false;
        if (!(code_span(h, inst) == brute_intersect(dc, dual))) return false;
        ++seen;
      }
      d = std::to_string(seen) + " codes";
      return true;
    });
    check("selforth-mass-formula", [&](std::string& d) {
      SelfOrthogonalEnumerator so(inst);
      d = to_string(so.size()) + " codes";
      bool ok = so.size() == count_selforthogonal(inst.fd);
      std::size_t seen = 0;
      so.for_each([&](const CyclicCode& c) {
        ok = ok && is_self_orthogonal(c, inst);
        return ok && ++seen < opt.max_codes;
      });
      return ok;
    });
    check("selforth-census", [&](std::string& d) {
      CyclicCodeSpace all(inst);
      if (all.size() > opt.max_codes) {
        d = "skipped, " + to_string(all.size()) + " cyclic codes";
        return true;
      }
      std::set<CyclicCode> found;
      for (Count idx = 0; idx < all.size(); ++idx) {
        const CyclicCode c = all.at(idx);
        const DenseCode dc = code_span(c, inst);
        if (brute_intersect(dc, brute_dual(dc)) == dc) found.insert(c);
      }
      const std::vector<CyclicCode> listed = enumerate_selforthogonal(inst);
      d = std::to_string(found.size()) + " of " + to_string(all.size()) + " cyclic codes are self-orthogonal";
      return found == std::set<CyclicCode>(listed.begin(), listed.end()) && listed.size() == found.size();
    });
    check("gray-selfdual", [&](std::string& d) {
      std::size_t seen = 0;
      bool ok = true;
      sd.for_each([&](const CyclicCode& c) {
        const FqMatrix g = generator_matrix(c, inst);
        ok = fq_is_zero(fq_mul_transpose(F, g, g)) && fq_rank(F, g) == 2 * static_cast<std::size_t>(inst.n) &&
             is_2_quasi_cyclic(g, F);
        return ok && ++seen < opt.max_codes;
      });
      d = std::to_string(seen) + " generator matrices";
      return ok;
    });
  }
  return out;
}

}  // namespace sdcyc
