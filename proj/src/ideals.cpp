#include "sdcyc/ideals.hpp"

#include <sstream>
#include <stdexcept>

namespace sdcyc {

namespace {

Count ipow(const Count& q, int e) {
  Count r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

Count exact_div(const Count& a, const Count& b) {
  if (a % b != 0) throw std::logic_error("counting formula: inexact division");
  return a / b;
}

void require_k(int k) {
  if (k < 2) fail(ErrorKind::OutOfRange, "k must be >= 2");
}

}  // namespace

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::UPow: return "UPow";
    case Shape::UsF: return "UsF";
    case Shape::MixedOne: return "MixedOne";
    case Shape::MixedTwo: return "MixedTwo";
    case Shape::TwoGen: return "TwoGen";
    case Shape::TwoGenOmega: return "TwoGenOmega";
  }
  return "?";
}

Shape shape_from_name(const std::string& name) {
  for (Shape s : {Shape::UPow, Shape::UsF, Shape::MixedOne, Shape::MixedTwo, Shape::TwoGen, Shape::TwoGenOmega}) {
    if (name == shape_name(s)) return s;
  }
  fail(ErrorKind::InvalidArgument, "unknown ideal shape '" + name + "'");
}

IdealLabel make_upow(int j, int i) { return IdealLabel{j, Shape::UPow, i, 0, 0, {}}; }

IdealLabel make_usf(int j, int s) { return IdealLabel{j, Shape::UsF, 0, 0, s, {}}; }

IdealLabel make_mixed(int j, int i, int t, std::vector<std::uint64_t> omega, int k) {
  const Shape shape = t >= 2 * i - k ? Shape::MixedOne : Shape::MixedTwo;
  omega.resize(static_cast<std::size_t>(omega_length(shape, i, t, 0, k)));
  return IdealLabel{j, shape, i, t, 0, std::move(omega)};
}

IdealLabel make_two_gen(int j, int i, int s, int k) {
  if (i >= k) return make_usf(j, s);  // <u^k, u^s f> = <u^s f>
  return IdealLabel{j, Shape::TwoGen, i, 0, s, {}};
}

IdealLabel make_two_gen_omega(int j, int i, int t, int s, std::vector<std::uint64_t> omega, int k) {
  omega.resize(static_cast<std::size_t>(omega_length(Shape::TwoGenOmega, i, t, s, k)));
  return IdealLabel{j, Shape::TwoGenOmega, i, t, s, std::move(omega)};
}

int omega_length(Shape shape, int i, int t, int s, int k) {
  switch (shape) {
    case Shape::MixedOne: return i - t;
    case Shape::MixedTwo: return k - i;
    case Shape::TwoGenOmega: return s - t;
    default: return 0;
  }
}

void validate_label(const IdealLabel& L, int k, unsigned bits) {
  auto bad = [&](const std::string& why) { fail(ErrorKind::OutOfRange, std::string(shape_name(L.shape)) + ": " + why); };
  switch (L.shape) {
    case Shape::UPow:
      if (L.i < 0 || L.i > k) bad("need 0 <= i <= k");
      break;
    case Shape::UsF:
      if (L.s < 0 || L.s > k - 1) bad("need 0 <= s <= k-1");
      break;
    case Shape::MixedOne:
      if (!(0 <= L.t && L.t < L.i && L.i <= k - 1)) bad("need 0 <= t < i <= k-1");
      if (L.t < 2 * L.i - k) bad("need t >= 2i-k");
      break;
    case Shape::MixedTwo:
      if (!(0 <= L.t && L.t < L.i && L.i <= k - 1)) bad("need 0 <= t < i <= k-1");
      if (L.t >= 2 * L.i - k) bad("need t < 2i-k");
      break;
    case Shape::TwoGen:
      if (!(0 <= L.s && L.s < L.i && L.i <= k - 1)) bad("need 0 <= s < i <= k-1");
      break;
    case Shape::TwoGenOmega:
      if (!(0 <= L.t && L.t < L.s && L.s < L.i && L.i <= k - 1)) bad("need 0 <= t < s < i <= k-1");
      if (L.i + L.s > k + L.t - 1) bad("need i+s <= k+t-1");
      break;
  }
  const int len = omega_length(L.shape, L.i, L.t, L.s, k);
  if (static_cast<int>(L.omega.size()) != len) bad("omega has the wrong u-length");
  for (std::uint64_t a : L.omega) {
    if (bits < 64 && (a >> bits) != 0) bad("omega coefficient outside F_j");
  }
  if (len > 0 && L.omega[0] == 0) bad("omega is not a unit");
}

int ideal_log_q_size(const IdealLabel& L, int k) {
  switch (L.shape) {
    case Shape::UPow: return 2 * (k - L.i);
    case Shape::UsF: return k - L.s;
    case Shape::MixedOne: return 2 * (k - L.i);
    case Shape::MixedTwo: return k - L.t;
    case Shape::TwoGen:
    case Shape::TwoGenOmega: return 2 * k - L.i - L.s;
  }
  return 0;
}

std::string label_to_string(const IdealLabel& L, const FieldCtx& ctx) {
  const std::string f = "f" + std::to_string(L.j + 1);
  auto upow = [](int e) { return e == 0 ? std::string("1") : e == 1 ? std::string("u") : "u^" + std::to_string(e); };
  auto uf = [&](int e) { return e == 0 ? f : upow(e) + f; };
  auto om = [&]() {
    std::string s = "(";
    for (std::size_t l = 0; l < L.omega.size(); ++l) {
      if (l) s += "+";
      s += (l == 0 ? "" : upow(static_cast<int>(l)) + "*") + poly_to_string(unpack(L.omega[l], ctx.m()));
    }
    return s + ")";
  };
  switch (L.shape) {
    case Shape::UPow: return "<" + (L.i == 0 ? std::string("1") : upow(L.i)) + ">";
    case Shape::UsF: return "<" + uf(L.s) + ">";
    case Shape::MixedOne:
    case Shape::MixedTwo: return "<" + upow(L.i) + "+" + uf(L.t) + om() + ">";
    case Shape::TwoGen: return "<" + upow(L.i) + ", " + uf(L.s) + ">";
    case Shape::TwoGenOmega: return "<" + upow(L.i) + "+" + uf(L.t) + om() + ", " + uf(L.s) + ">";
  }
  return "<?>";
}

Count gamma(const Count& q, int rho) {
  if (rho < 1) fail(ErrorKind::OutOfRange, "gamma needs rho >= 1");
  if (rho <= 3) return 0;
  Count g = 1;
  for (int r = 5; r <= rho; ++r) {
    for (int s = 1; s <= r / 2 - 1; ++s) g += Count(r - 2 * s - 1) * ipow(q, s - 1);
  }
  return g;
}

Count omega1(const Count& q, int k) {
  require_k(k);
  if (k % 2 == 0) return exact_div(ipow(q, k / 2 + 1) + ipow(q, k / 2) - 2, q - 1) - (k + 1);
  return exact_div(2 * (ipow(q, (k + 1) / 2) - 1), q - 1) - (k + 1);
}

Count omega2(const Count& q, int k) {
  require_k(k);
  const int start = k % 2 == 0 ? k / 2 + 1 : (k + 1) / 2;
  Count sum = 0;
  for (int i = start; i <= k - 1; ++i) sum += Count(2 * i - k) * ipow(q, k - i - 1);
  return (q - 1) * sum;
}

Count count_ideals_sum(const Count& q, int k) {
  require_k(k);
  Count sum = 0;
  if (k % 2 == 0) {
    for (int i = 0; i <= k / 2; ++i) sum += Count(1 + 4 * i) * ipow(q, k / 2 - i);
  } else {
    for (int i = 0; i <= (k - 1) / 2; ++i) sum += Count(3 + 4 * i) * ipow(q, (k - 1) / 2 - i);
  }
  return sum;
}

Count count_ideals_closed(const Count& q, int k) {
  require_k(k);
  const Count den = (q - 1) * (q - 1);
  const Count tail = -q * (2 * k + 5) + (2 * k + 1);
  if (k % 2 == 0) return exact_div((q + 3) * ipow(q, k / 2 + 1) + tail, den);
  return exact_div((3 * q + 1) * ipow(q, (k - 1) / 2 + 1) + tail, den);
}

Count count_ideals_by_shape(const Count& q, int k) {
  require_k(k);
  return 1 + Count(k * (k + 3) / 2) + omega1(q, k) + omega2(q, k) + (q - 1) * gamma(q, k);
}

Count count_ideals_small_k(const Count& q, int k) {
  switch (k) {
    case 2: return 5 + q;
    case 3: return 7 + 3 * q;
    case 4: return 9 + 5 * q + q * q;
    case 5: return 11 + 7 * q + 3 * q * q;
    default: fail(ErrorKind::OutOfRange, "small-k closed forms exist for k = 2..5 only");
  }
}

Count count_ideals(const Count& q, int k) {
  require_k(k);
  if (q < 2) fail(ErrorKind::OutOfRange, "q must be >= 2");
  const Count a = count_ideals_sum(q, k);
  const Count b = count_ideals_closed(q, k);
  const Count c = count_ideals_by_shape(q, k);
  if (a != b || a != c) throw std::logic_error("ideal count formulas disagree");
  if (k <= 5 && count_ideals_small_k(q, k) != a) throw std::logic_error("small-k ideal count disagrees");
  return a;
}

Count unit_count(unsigned bits, int len) {
  if (len <= 0) return 1;
  const Count q = Count(1) << bits;
  return (q - 1) * ipow(q, len - 1);
}

std::vector<std::uint64_t> unit_at(const Count& index, unsigned bits, int len) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(len), 0);
  if (len == 0) return out;
  const Count q = Count(1) << bits;
  Count rest = index;
  for (int l = len - 1; l >= 1; --l) {
    out[static_cast<std::size_t>(l)] = static_cast<std::uint64_t>(rest % q);
    rest /= q;
  }
  if (rest >= q - 1) fail(ErrorKind::OutOfRange, "unit index out of range");
  out[0] = static_cast<std::uint64_t>(rest) + 1;
  return out;
}

IdealCatalog::IdealCatalog(int j, unsigned bits, int k) : j_(j), bits_(bits), k_(k) {
  require_k(k);
  auto add = [&](Shape shape, int i, int t, int s) {
    const int len = omega_length(shape, i, t, s, k);
    families_.push_back({shape, i, t, s, len, unit_count(bits, len)});
  };
  for (int i = 0; i <= k; ++i) add(Shape::UPow, i, 0, 0);
  for (int s = 0; s <= k - 1; ++s) add(Shape::UsF, 0, 0, s);
  for (int i = 1; i <= k - 1; ++i)
    for (int t = 0; t < i; ++t)
      if (t >= 2 * i - k) add(Shape::MixedOne, i, t, 0);
  for (int i = 1; i <= k - 1; ++i)
    for (int t = 0; t < i; ++t)
      if (t < 2 * i - k) add(Shape::MixedTwo, i, t, 0);
  for (int i = 1; i <= k - 1; ++i)
    for (int s = 0; s < i; ++s) add(Shape::TwoGen, i, 0, s);
  for (int i = 1; i <= k - 1; ++i)
    for (int t = 0; t < i; ++t)
      for (int s = t + 1; s < i; ++s)
        if (i + s <= k + t - 1) add(Shape::TwoGenOmega, i, t, s);
  total_ = 0;
  for (const Family& f : families_) total_ += f.size;
}

IdealLabel IdealCatalog::at(const Count& index) const {
  Count rest = index;
  for (const Family& f : families_) {
    if (rest < f.size) {
      return IdealLabel{j_, f.shape, f.i, f.t, f.s, unit_at(rest, bits_, f.omega_len)};
    }
    rest -= f.size;
  }
  fail(ErrorKind::OutOfRange, "ideal index out of range");
}

Count IdealCatalog::shape_count(Shape shape) const {
  Count c = 0;
  for (const Family& f : families_)
    if (f.shape == shape) c += f.size;
  return c;
}

void IdealCatalog::for_each(const std::function<void(const IdealLabel&)>& fn) const {
  for (const Family& f : families_) {
    for (Count idx = 0; idx < f.size; ++idx) fn(IdealLabel{j_, f.shape, f.i, f.t, f.s, unit_at(idx, bits_, f.omega_len)});
  }
}

std::vector<IdealLabel> enumerate_ideals(int j, int k, const Instance& inst) {
  if (j < 0 || j >= inst.r()) fail(ErrorKind::OutOfRange, "component index out of range");
  IdealCatalog cat(j, inst.bits(j), k);
  if (cat.size() > Count(1) << 24) fail(ErrorKind::TooLarge, "more than 2^24 ideals; iterate IdealCatalog instead");
  std::vector<IdealLabel> out;
  cat.for_each([&](const IdealLabel& l) { out.push_back(l); });
  return out;
}

std::vector<std::vector<Poly>> label_generators(const IdealLabel& L, int k, const FieldCtx& ctx, const Poly& f) {
  const Poly f2 = poly_mul(ctx, f, f);
  const auto uk = static_cast<std::size_t>(k);
  auto upow = [&](int e) {
    std::vector<Poly> g(uk);
    if (e < k) g[static_cast<std::size_t>(e)] = Poly::constant(1);
    return g;
  };
  auto uf = [&](int e) {
    std::vector<Poly> g(uk);
    if (e < k) g[static_cast<std::size_t>(e)] = f;
    return g;
  };
  auto mixed = [&]() {
    std::vector<Poly> g = upow(L.i);
    for (std::size_t l = 0; l < L.omega.size(); ++l) {
      const std::size_t e = static_cast<std::size_t>(L.t) + l;
      if (e >= uk) break;
      g[e] = poly_add(g[e], poly_mulmod(ctx, f, unpack(L.omega[l], ctx.m()), f2));
    }
    return g;
  };
  switch (L.shape) {
    case Shape::UPow: return {upow(L.i)};
    case Shape::UsF: return {uf(L.s)};
    case Shape::MixedOne:
    case Shape::MixedTwo: return {mixed()};
    case Shape::TwoGen: return {upow(L.i), uf(L.s)};
    case Shape::TwoGenOmega: return {mixed(), uf(L.s)};
  }
  return {};
}

std::shared_ptr<const RingSpace> component_space(const Instance& inst, int j) {
  const Poly f = inst.fd.factor(j);
  return std::make_shared<RingSpace>(inst.field, poly_mul(inst.field, f, f), inst.k);
}

DenseCode ideal_span(const IdealLabel& label, const Instance& inst) {
  return span_code(component_space(inst, label.j), label_generators(label, inst.k, inst.field, inst.fd.factor(label.j)));
}

std::vector<Word> ideal_members(const IdealLabel& label, const Instance& inst) {
  const unsigned ring_bits = 2 * inst.bits(label.j) * static_cast<unsigned>(inst.k);
  if (ring_bits > kOracleEnumBits) fail(ErrorKind::TooLarge, "component ring exceeds 2^24 elements");
  return ideal_span(label, inst).members();
}

CyclicCode make_code(const Instance& inst, std::vector<IdealLabel> components) {
  return CyclicCode{inst.n, inst.m(), inst.k, inst.field.modulus(), std::move(components)};
}

void validate_code(const CyclicCode& code, const Instance& inst) {
  if (code.n != inst.n || code.m != inst.m() || code.k != inst.k || code.modulus != inst.field.modulus()) {
    fail(ErrorKind::BaseMismatch, "code parameters differ from the instance");
  }
  if (static_cast<int>(code.components.size()) != inst.r()) fail(ErrorKind::OutOfRange, "wrong number of components");
  for (int j = 0; j < inst.r(); ++j) {
    const IdealLabel& L = code.components[static_cast<std::size_t>(j)];
    if (L.j != j) fail(ErrorKind::OutOfRange, "component index mismatch");
    validate_label(L, inst.k, inst.bits(j));
  }
}

std::string code_to_string(const CyclicCode& code, const FieldCtx& ctx) {
  std::ostringstream os;
  for (std::size_t j = 0; j < code.components.size(); ++j) {
    if (j) os << " + ";
    os << "e" << (j + 1) << label_to_string(code.components[j], ctx);
  }
  return os.str();
}

std::vector<std::vector<Poly>> code_generators(const CyclicCode& code, const Instance& inst) {
  validate_code(code, inst);
  const Poly big = inst.fd.ambient_modulus();
  std::vector<std::vector<Poly>> out;
  for (int j = 0; j < inst.r(); ++j) {
    const Poly& e = inst.idem.eps[static_cast<std::size_t>(j)];
    for (auto g : label_generators(code.components[static_cast<std::size_t>(j)], inst.k, inst.field, inst.fd.factor(j))) {
      for (Poly& p : g) p = poly_mulmod(inst.field, p, e, big);
      out.push_back(std::move(g));
    }
  }
  return out;
}

DenseCode code_span(const CyclicCode& code, const Instance& inst) {
  return span_code(RingSpace::cyclic(inst.field, inst.n, inst.k), code_generators(code, inst));
}

unsigned code_log2_size(const CyclicCode& code, const Instance& inst) {
  unsigned total = 0;
  for (int j = 0; j < inst.r(); ++j) {
    total += inst.bits(j) * static_cast<unsigned>(ideal_log_q_size(code.components[static_cast<std::size_t>(j)], inst.k));
  }
  return total;
}

CyclicCodeSpace::CyclicCodeSpace(const Instance& inst) : inst_(&inst), total_(1) {
  for (int j = 0; j < inst.r(); ++j) {
    catalogs_.emplace_back(j, inst.bits(j), inst.k);
    total_ *= catalogs_.back().size();
  }
}

CyclicCode CyclicCodeSpace::at(const Count& index) const {
  if (index >= total_) fail(ErrorKind::OutOfRange, "code index out of range");
  std::vector<IdealLabel> comps(catalogs_.size());
  Count rest = index;
  for (std::size_t j = catalogs_.size(); j-- > 0;) {
    comps[j] = catalogs_[j].at(rest % catalogs_[j].size());
    rest /= catalogs_[j].size();
  }
  return make_code(*inst_, std::move(comps));
}

}  // namespace sdcyc
