#include "sdcyc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sdcyc/descriptor.hpp"
#include "sdcyc/duality.hpp"
#include "sdcyc/gray.hpp"
#include "sdcyc/selfdual.hpp"
#include "sdcyc/verify.hpp"

namespace sdcyc {

namespace {

struct Params {
  int n = 1;
  unsigned m = 1;
  int k = 2;
  std::string modulus;
  long long limit = -1;
  unsigned threads = 0;
  std::string isa;
};

FieldCtx make_field(const Params& p) {
  if (p.m < 1 || p.m > FieldCtx::kMaxM) fail(ErrorKind::OutOfRange, "m must be in 1.." + std::to_string(FieldCtx::kMaxM));
  if (p.modulus.empty()) return FieldCtx(p.m);
  return FieldCtx(p.m, modulus_from_hex(p.modulus));
}

void add_nm(CLI::App* sub, Params& p, bool with_k) {
  sub->add_option("--n", p.n, "odd part of the length 2n")->required();
  sub->add_option("--m", p.m, "field F_{2^m}")->default_val(1);
  sub->add_option("--modulus", p.modulus, "field modulus as hex, bit i = coefficient of y^i");
  if (with_k) sub->add_option("--k", p.k, "nilpotency index of u")->default_val(2);
}

void add_limit(CLI::App* sub, Params& p) { sub->add_option("--limit", p.limit, "stop after this many records"); }

std::string read_code_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

struct Loaded {
  CyclicCode code;
  std::unique_ptr<Instance> inst;
};

Loaded load_code(const std::string& arg) {
  Loaded l;
  l.code = code_from_string(read_code_arg(arg));
  l.inst = std::make_unique<Instance>(l.code.n, FieldCtx(l.code.m, l.code.modulus), l.code.k);
  validate_code(l.code, *l.inst);
  return l;
}

WeightOptions weight_options(const Params& p) {
  WeightOptions o;
  if (p.threads > 0) o.threads = p.threads;
  if (p.isa == "scalar") o.isa = kernels::Isa::Scalar;
  else if (p.isa == "avx2") o.isa = kernels::Isa::Avx2;
  else if (!p.isa.empty()) fail(ErrorKind::InvalidArgument, "--isa must be scalar or avx2");
  return o;
}

void emit_table(std::ostream& out, int section) {
  switch (section) {
    case 2:
      out << "k,L_k\n";
      for (int k = 2; k <= 9; ++k) out << k << ',' << count_ideals(2, k) << '\n';
      break;
    case 4:
    case 5:
      out << "2n," << (section == 4 ? "selfdual" : "selforthogonal") << '\n';
      for (int n = 3; n <= 49; n += 2) {
        const FactorData fd = factor_xn_minus_1(n, FieldCtx(1));
        out << 2 * n << ',' << (section == 4 ? count_selfdual(fd, 2) : count_selforthogonal(fd)) << '\n';
      }
      break;
    default: fail(ErrorKind::InvalidArgument, "tables exist for sections 2, 4 and 5");
  }
}

template <typename Enumerator>
void stream_codes(std::ostream& out, const Enumerator& e, long long limit) {
  long long emitted = 0;
  e.for_each([&](const CyclicCode& c) {
    if (limit >= 0 && emitted >= limit) return false;
    out << code_to_json(c).dump() << '\n';
    ++emitted;
    return true;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"self-dual and self-orthogonal cyclic codes over F_{2^m}[u]/<u^k>"};
  app.name("sdcyc");
  app.require_subcommand(1);
  Params p;

  auto* factor = app.add_subcommand("factor", "factor x^n - 1 and print the reciprocal classification");
  add_nm(factor, p, false);

  std::string q_text;
  auto* cideals = app.add_subcommand("count-ideals", "number of ideals of K_j[u]/<u^k> for |F_j| = q");
  cideals->add_option("--q", q_text, "residue field size")->required();
  cideals->add_option("--k", p.k)->required();

  int comp = 1;
  auto* eideals = app.add_subcommand("enum-ideals", "list the ideals of one component");
  add_nm(eideals, p, true);
  eideals->add_option("--j", comp, "component, 1-based")->default_val(1);
  add_limit(eideals, p);

  auto* csd = app.add_subcommand("count-selfdual", "mass formula for self-dual codes");
  add_nm(csd, p, true);
  auto* esd = app.add_subcommand("enum-selfdual", "stream self-dual codes as JSON lines");
  add_nm(esd, p, true);
  add_limit(esd, p);

  auto* cso = app.add_subcommand("count-selforth", "mass formula for self-orthogonal codes (k = 2)");
  add_nm(cso, p, false);
  auto* eso = app.add_subcommand("enum-selforth", "stream self-orthogonal codes (k = 2)");
  add_nm(eso, p, false);
  add_limit(eso, p);

  std::string code_arg;
  auto* hullc = app.add_subcommand("hull", "dual, hull and hull dimension of a k = 2 code");
  hullc->add_option("--code", code_arg, "code descriptor JSON, or @file")->required();

  bool want_matrix = false, want_weights = false, want_mindist = false, want_grid = false;
  auto* gray = app.add_subcommand("gray", "Gray image of a k = 2 code");
  gray->add_option("--code", code_arg, "code descriptor JSON, or @file")->required();
  gray->add_flag("--genmatrix", want_matrix, "generator matrix");
  gray->add_flag("--weights", want_weights, "Hamming weight distribution of the image");
  gray->add_flag("--mindist", want_mindist, "minimum distance of the image");
  gray->add_flag("--grid", want_grid, "print the matrix as a plain grid");
  gray->add_option("--threads", p.threads, "worker threads (default SDCYC_THREADS or all cores)");
  gray->add_option("--isa", p.isa, "scalar or avx2");

  auto* verify = app.add_subcommand("verify", "run the brute-force oracle suite");
  add_nm(verify, p, true);

  int section = 4;
  auto* tables = app.add_subcommand("tables", "count tables as CSV");
  tables->add_option("--section,--paper-section", section, "2: ideal counts L_k, 4: self-dual, 5: self-orthogonal")
      ->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*factor) {
      const Instance inst(p.n, make_field(p), 2);
      out << factor_to_json(inst).dump(2) << '\n';
    } else if (*cideals) {
      Count q;
      try {
        q = Count(q_text);
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "--q must be an integer");
      }
      out << count_ideals(q, p.k) << '\n';
    } else if (*eideals) {
      const Instance inst(p.n, make_field(p), p.k);
      if (comp < 1 || comp > inst.r()) fail(ErrorKind::OutOfRange, "--j out of range");
      IdealCatalog cat(comp - 1, inst.bits(comp - 1), p.k);
      const Count n = p.limit >= 0 ? std::min(cat.size(), Count(p.limit)) : cat.size();
      for (Count i = 0; i < n; ++i) out << label_to_json(cat.at(i), inst.m()).dump() << '\n';
    } else if (*csd) {
      out << count_selfdual(factor_xn_minus_1(p.n, make_field(p)), p.k) << '\n';
    } else if (*esd) {
      const Instance inst(p.n, make_field(p), p.k);
      stream_codes(out, SelfDualEnumerator(inst), p.limit);
    } else if (*cso) {
      out << count_selforthogonal(factor_xn_minus_1(p.n, make_field(p))) << '\n';
    } else if (*eso) {
      const Instance inst(p.n, make_field(p), 2);
      stream_codes(out, SelfOrthogonalEnumerator(inst), p.limit);
    } else if (*hullc) {
      const Loaded l = load_code(code_arg);
      const CyclicCode h = hull(l.code, *l.inst);
      Json j{{"code", code_to_json(l.code)},
             {"dual", code_to_json(dual_code(l.code, *l.inst))},
             {"hull", code_to_json(h)},
             {"code_dimension", to_string(code_dimension(l.code, *l.inst))},
             {"hull_dimension", to_string(code_dimension(h, *l.inst))},
             {"self_orthogonal", h == l.code},
             {"self_dual", is_self_dual(l.code, *l.inst)}};
      out << j.dump(2) << '\n';
    } else if (*gray) {
      const Loaded l = load_code(code_arg);
      const bool sd = l.inst->k == 2 && is_self_dual(l.code, *l.inst);
      const FqMatrix g = sd ? generator_matrix(l.code, *l.inst) : span_generator_matrix(l.code, *l.inst);
      if (!want_matrix && !want_weights && !want_mindist) want_matrix = true;
      if (want_grid) {
        out << matrix_to_grid(g);
      } else {
        Json j{{"length", g.cols}, {"dimension", fq_rank(l.inst->field, g)}, {"method", sd ? "blocks" : "span"}};
        if (want_matrix) j["generator_matrix"] = matrix_to_json(g, l.inst->m());
        if (want_weights || want_mindist) {
          const WeightDist wd = weight_distribution(g, l.inst->field, weight_options(p));
          if (want_weights) j["weights"] = weights_to_json(wd);
          if (want_mindist) j["min_distance"] = min_distance(wd);
        }
        out << j.dump(2) << '\n';
      }
    } else if (*verify) {
      const Instance inst(p.n, make_field(p), p.k);
      bool ok = true;
      for (const CheckResult& r : verify_instance(inst)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
        ok = ok && r.passed;
      }
      return ok ? kExitOk : kExitVerify;
    } else if (*tables) {
      emit_table(out, section);
    }
  } catch (const Error& e) {
    err << "sdcyc: " << e.what() << '\n';
    return e.kind() == ErrorKind::TooLarge ? kExitTooLarge : kExitUsage;
  }
  return kExitOk;
}

}  // namespace sdcyc
