#include "sdcyc/selfdual.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdcyc {

namespace {

Count ipow(const Count& q, int e) {
  Count r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

void require_self_reciprocal(const Instance& inst, int j) {
  if (j < 0 || j >= inst.fd.lambda) fail(ErrorKind::OutOfRange, "Theta sets exist for self-reciprocal components only");
}

}  // namespace

ThetaSet::ThetaSet(const Instance& inst, int j, int s) : inst_(&inst), j_(j), s_(s) { init(std::nullopt); }

ThetaSet::ThetaSet(const Instance& inst, int j, int s, std::uint64_t primitive) : inst_(&inst), j_(j), s_(s) {
  init(primitive);
}

void ThetaSet::init(std::optional<std::uint64_t> primitive) {
  require_self_reciprocal(*inst_, j_);
  if (s_ < 1) fail(ErrorKind::OutOfRange, "Theta_{j,s} needs s >= 1");
  const unsigned bits = inst_->bits(j_);
  if (j_ == 0) {
    q_ = Count(1) << bits;
    have_gen_ = true;
    return;
  }
  const int d = inst_->fd.degree(j_);
  const ResidueField& F = inst_->comps.field(j_);
  q_ = Count(1) << (bits / 2);
  shift_ = F.pow(inst_->comps.x_inverse(j_), Count(d / 2));
  unshift_ = F.pow(F.x(), Count(d / 2));
  if (!primitive && bits <= 63) primitive = F.from_poly(find_primitive(inst_->fd.factor(j_), inst_->field));
  if (primitive) {
    gen_ = F.pow(*primitive, q_ + 1);
    have_gen_ = true;
  }
}

Count ThetaSet::size() const { return (q_ - 1) * ipow(q_, s_ - 1); }

std::uint64_t ThetaSet::base_at(const Count& l) const {
  if (j_ == 0) return static_cast<std::uint64_t>(l) + 1;
  if (!have_gen_) fail(ErrorKind::TooLarge, "residue field too large to list Theta");
  const ResidueField& F = inst_->comps.field(j_);
  return F.mul(shift_, F.pow(gen_, l));
}

std::vector<std::uint64_t> ThetaSet::at(const Count& index) const {
  if (index < 0 || index >= size()) fail(ErrorKind::OutOfRange, "Theta index out of range");
  std::vector<std::uint64_t> w(static_cast<std::size_t>(s_), 0);
  Count rest = index;
  for (int l = s_ - 1; l >= 1; --l) {
    const Count digit = rest % q_;
    rest /= q_;
    w[static_cast<std::size_t>(l)] = digit == 0 ? 0 : base_at(digit - 1);
  }
  w[0] = base_at(rest);
  return w;
}

bool ThetaSet::contains_base(std::uint64_t a) const {
  if (a == 0) return false;
  const unsigned bits = inst_->bits(j_);
  if (bits < 64 && (a >> bits) != 0) return false;
  if (j_ == 0) return true;
  const ResidueField& F = inst_->comps.field(j_);
  return F.pow(F.mul(unshift_, a), q_ - 1) == 1;
}

bool ThetaSet::contains(const std::vector<std::uint64_t>& w) const {
  if (static_cast<int>(w.size()) != s_) return false;
  if (!contains_base(w[0])) return false;
  return std::all_of(w.begin() + 1, w.end(), [this](std::uint64_t a) { return a == 0 || contains_base(a); });
}

std::vector<std::vector<std::uint64_t>> ThetaSet::members() const {
  if (size() > Count(1) << 20) fail(ErrorKind::TooLarge, "Theta set too large to list");
  std::vector<std::vector<std::uint64_t>> out;
  const auto total = static_cast<std::uint64_t>(size());
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(at(i));
  std::sort(out.begin(), out.end());
  return out;
}

ThetaSet theta_set(const Instance& inst, int j, int s) { return ThetaSet(inst, j, s); }

std::vector<std::vector<std::uint64_t>> theta_filter(const Instance& inst, int j, int s) {
  require_self_reciprocal(inst, j);
  const unsigned bits = inst.bits(j);
  if (bits * static_cast<unsigned>(s) > 20) fail(ErrorKind::TooLarge, "unit group too large to filter");
  std::vector<std::vector<std::uint64_t>> out;
  const Count total = unit_count(bits, s);
  for (Count idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> w = unit_at(idx, bits, s);
    if (inst.comps.omega_prime(j, w) == w) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdealLabel mate_label(const IdealLabel& L, const Instance& inst) {
  const int k = inst.k;
  const int t = inst.fd.rho(L.j);
  auto w = [&]() { return inst.comps.omega_prime(L.j, L.omega); };
  switch (L.shape) {
    case Shape::UPow: return make_upow(t, k - L.i);
    case Shape::UsF: return make_two_gen(t, k - L.s, 0, k);
    case Shape::MixedOne: return make_mixed(t, k - L.i, k + L.t - 2 * L.i, w(), k);
    case Shape::MixedTwo:
      if (L.t == 0) return make_mixed(t, L.i, 0, w(), k);
      return make_two_gen_omega(t, L.i - L.t, 0, k - L.i, w(), k);
    case Shape::TwoGen: return make_two_gen(t, k - L.s, k - L.i, k);
    case Shape::TwoGenOmega:
      if (L.t == 0) return make_mixed(t, k - L.s, k - L.i - L.s, w(), k);
      return make_two_gen_omega(t, k - L.s, k + L.t - L.i - L.s, k - L.i, w(), k);
  }
  throw std::logic_error("mate_label: unknown shape");
}

bool is_self_dual(const CyclicCode& code, const Instance& inst) {
  validate_code(code, inst);
  for (int j = 0; j < inst.r(); ++j) {
    const IdealLabel& c = code.components[static_cast<std::size_t>(j)];
    if (code.components[static_cast<std::size_t>(inst.fd.rho(j))] != mate_label(c, inst)) return false;
  }
  return true;
}

void SlotProduct::add(Count size, Fill fill) {
  total_ *= size;
  slots_.push_back({std::move(size), std::move(fill)});
}

CyclicCode SlotProduct::at(const Instance& inst, const Count& index) const {
  if (index < 0 || index >= total_) fail(ErrorKind::OutOfRange, "code index out of range");
  std::vector<IdealLabel> comps(static_cast<std::size_t>(inst.r()));
  Count rest = index;
  for (std::size_t i = slots_.size(); i-- > 0;) {
    slots_[i].fill(rest % slots_[i].size, comps);
    rest /= slots_[i].size;
  }
  return make_code(inst, std::move(comps));
}

void SlotProduct::for_range(const Instance& inst, const Count& begin, const Count& end,
                            const std::function<bool(const CyclicCode&)>& fn) const {
  const Count stop = std::min(end, total_);
  if (begin >= stop) return;
  // Odometer over slot digits, last slot fastest.
  std::vector<Count> digit(slots_.size());
  Count rest = begin;
  for (std::size_t i = slots_.size(); i-- > 0;) {
    digit[i] = rest % slots_[i].size;
    rest /= slots_[i].size;
  }
  std::vector<IdealLabel> comps(static_cast<std::size_t>(inst.r()));
  for (std::size_t i = 0; i < slots_.size(); ++i) slots_[i].fill(digit[i], comps);
  for (Count idx = begin; idx < stop; ++idx) {
    if (!fn(make_code(inst, comps))) return;
    for (std::size_t i = slots_.size(); i-- > 0;) {
      if (++digit[i] < slots_[i].size) {
        slots_[i].fill(digit[i], comps);
        break;
      }
      digit[i] = 0;
      slots_[i].fill(digit[i], comps);
    }
  }
}

SelfDualEnumerator::SelfDualEnumerator(const Instance& inst) : inst_(&inst) {
  const int k = inst.k;
  if (k < 2) fail(ErrorKind::OutOfRange, "k must be >= 2");
  struct Family {
    Shape shape;
    int i, t, s;
    int theta_len;  // 0: no unit parameter
  };
  for (int j = 0; j < inst.fd.lambda; ++j) {
    std::vector<Family> fams;
    if (k % 2 == 0) {
      fams.push_back({Shape::UPow, k / 2, 0, 0, 0});
      fams.push_back({Shape::UsF, 0, 0, 0, 0});
      for (int t = 0; t < k / 2; ++t) fams.push_back({Shape::MixedOne, k / 2, t, 0, k / 2 - t});
    } else {
      fams.push_back({Shape::UsF, 0, 0, 0, 0});
    }
    for (int i = k / 2 + 1; i <= k - 1; ++i) {
      fams.push_back({Shape::MixedTwo, i, 0, 0, k - i});
      fams.push_back({Shape::TwoGen, i, 0, k - i, 0});
      for (int t = 1; t < k - i; ++t) fams.push_back({Shape::TwoGenOmega, i, t, k - i, k - i - t});
    }
    std::vector<std::pair<Family, std::optional<ThetaSet>>> slot;
    Count size = 0;
    for (const Family& f : fams) {
      std::optional<ThetaSet> th;
      if (f.theta_len > 0) th.emplace(inst, j, f.theta_len);
      size += th ? th->size() : Count(1);
      slot.emplace_back(f, std::move(th));
    }
    prod_.add(size, [slot, j](const Count& idx, std::vector<IdealLabel>& comps) {
      Count rest = idx;
      for (const auto& [f, th] : slot) {
        const Count n = th ? th->size() : Count(1);
        if (rest < n) {
          comps[static_cast<std::size_t>(j)] =
              IdealLabel{j, f.shape, f.i, f.t, f.s, th ? th->at(rest) : std::vector<std::uint64_t>{}};
          return;
        }
        rest -= n;
      }
      throw std::logic_error("self-dual slot index out of range");
    });
  }
  const Instance* ip = &inst;
  for (int j = inst.fd.lambda; j < inst.fd.lambda + inst.fd.epsilon; ++j) {
    IdealCatalog cat(j, inst.bits(j), k);
    const int mate = inst.fd.rho(j);
    prod_.add(cat.size(), [cat, j, mate, ip](const Count& idx, std::vector<IdealLabel>& comps) {
      comps[static_cast<std::size_t>(j)] = cat.at(idx);
      comps[static_cast<std::size_t>(mate)] = mate_label(comps[static_cast<std::size_t>(j)], *ip);
    });
  }
  if (prod_.size() != count_selfdual(inst)) throw std::logic_error("self-dual enumeration size disagrees with the mass formula");
}

std::vector<CyclicCode> enumerate_selfdual(const Instance& inst) {
  SelfDualEnumerator e(inst);
  if (e.size() > Count(1) << 24) fail(ErrorKind::TooLarge, "more than 2^24 self-dual codes; stream them instead");
  std::vector<CyclicCode> out;
  e.for_each([&](const CyclicCode& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Count count_selfdual(const FactorData& fd, int k) {
  if (k < 2) fail(ErrorKind::OutOfRange, "k must be >= 2");
  const unsigned m = fd.field.m();
  Count total = 1;
  for (int j = 0; j < fd.lambda; ++j) {
    const unsigned half = j == 0 ? m : m * static_cast<unsigned>(fd.degree(j)) / 2;
    Count sum = 0;
    for (int s = 0; s <= k / 2; ++s) sum += Count(1) << (half * static_cast<unsigned>(s));
    total *= sum;
  }
  for (int j = fd.lambda; j < fd.lambda + fd.epsilon; ++j) {
    total *= count_ideals(Count(1) << (m * static_cast<unsigned>(fd.degree(j))), k);
  }
  return total;
}

namespace {

// One choice for a slot: labels for one component, or for a component and its mate.
using Choice = std::vector<IdealLabel>;

struct Side {
  Shape shape;
  int i = 0, t = 0, s = 0;
};

Side upow(int i) { return {Shape::UPow, i, 0, 0}; }
Side usf(int s) { return {Shape::UsF, 0, 0, s}; }
Side mixed1(int i, int t) { return {Shape::MixedOne, i, t, 0}; }
Side mixed2(int i, int t) { return {Shape::MixedTwo, i, t, 0}; }
Side twogen(int i, int s) { return {Shape::TwoGen, i, 0, s}; }
Side tgo(int i, int t, int s) { return {Shape::TwoGenOmega, i, t, s}; }

IdealLabel place(int j, Side a, std::vector<std::uint64_t> w = {}) { return IdealLabel{j, a.shape, a.i, a.t, a.s, std::move(w)}; }

std::vector<std::vector<std::uint64_t>> all_units(unsigned bits, int len) {
  std::vector<std::vector<std::uint64_t>> out;
  const Count total = unit_count(bits, len);
  if (total > Count(1) << 20) fail(ErrorKind::TooLarge, "unit group too large to list");
  for (Count i = 0; i < total; ++i) out.push_back(unit_at(i, bits, len));
  return out;
}

class Table {
 public:
  Table(const Instance& inst, int j) : inst_(inst), j_(j), jp_(inst.fd.rho(j)) {}

  std::vector<Choice> choices;

  // Self-reciprocal entry, unit parameter drawn from Theta_{j,len}.
  void single(Side a, int len = 0) {
    if (len == 0) {
      choices.push_back({place(j_, a)});
      return;
    }
    for (auto& w : ThetaSet(inst_, j_, len).members()) choices.push_back({place(j_, a, w)});
  }
  // Pair entry; the mate carries omega'.
  void pair(Side a, Side b, int len = 0) {
    if (len == 0) {
      choices.push_back({place(j_, a), place(jp_, b)});
      return;
    }
    for (auto& w : all_units(inst_.bits(j_), len)) {
      choices.push_back({place(j_, a, w), place(jp_, b, inst_.comps.omega_prime(j_, w))});
    }
  }
  // <u^i', u^s' f'>, where <u^k, u^s' f'> = <u^s' f'>
  Side two(int i, int s) const { return i == inst_.k ? usf(s) : twogen(i, s); }

 private:
  const Instance& inst_;
  int j_, jp_;
};

std::vector<Choice> self_reciprocal_rows(const Instance& inst, int j) {
  Table t(inst, j);
  switch (inst.k) {
    case 2:
      t.single(upow(1));
      t.single(usf(0));
      t.single(mixed1(1, 0), 1);
      break;
    case 3:
      t.single(usf(0));
      t.single(twogen(2, 1));
      t.single(mixed2(2, 0), 1);
      break;
    case 4:
      t.single(upow(2));
      t.single(usf(0));
      t.single(mixed1(2, 1), 1);
      t.single(mixed1(2, 0), 2);
      t.single(mixed2(3, 0), 1);
      t.single(twogen(3, 1));
      break;
    case 5:
      t.single(usf(0));
      t.single(mixed2(3, 0), 2);
      t.single(mixed2(4, 0), 1);
      t.single(twogen(3, 2));
      t.single(twogen(4, 1));
      t.single(tgo(3, 1, 2), 1);
      break;
    default: fail(ErrorKind::UnsupportedK, "closed lists exist for k = 2..5");
  }
  return std::move(t.choices);
}

std::vector<Choice> pair_rows(const Instance& inst, int j) {
  Table t(inst, j);
  const int k = inst.k;
  for (int i = 0; i <= k; ++i) t.pair(upow(i), upow(k - i));
  for (int s = 0; s <= k - 1; ++s) t.pair(usf(s), t.two(k - s, 0));
  switch (k) {
    case 2:
      t.pair(mixed1(1, 0), mixed1(1, 0), 1);
      break;
    case 3:
      t.pair(mixed1(1, 0), mixed1(2, 1), 1);
      t.pair(mixed1(2, 1), mixed1(1, 0), 1);
      t.pair(mixed2(2, 0), mixed2(2, 0), 1);
      break;
    case 4:
      for (int i = 1; i <= 3; ++i) t.pair(mixed1(i, i - 1), mixed1(4 - i, 3 - i), 1);
      t.pair(mixed1(2, 0), mixed1(2, 0), 2);
      t.pair(mixed2(3, 0), mixed2(3, 0), 1);
      t.pair(mixed2(3, 1), tgo(2, 0, 1), 1);
      t.pair(tgo(2, 0, 1), mixed2(3, 1), 1);
      break;
    case 5:
      for (int i = 1; i <= 4; ++i) t.pair(mixed1(i, i - 1), mixed1(5 - i, 4 - i), 1);
      t.pair(mixed1(2, 0), mixed1(3, 1), 2);
      t.pair(mixed1(3, 1), mixed1(2, 0), 2);
      t.pair(mixed2(3, 0), mixed2(3, 0), 2);
      t.pair(mixed2(4, 0), mixed2(4, 0), 1);
      t.pair(mixed2(4, 1), tgo(3, 0, 1), 1);
      t.pair(mixed2(4, 2), tgo(2, 0, 1), 1);
      t.pair(tgo(2, 0, 1), mixed2(4, 2), 1);
      t.pair(tgo(3, 0, 1), mixed2(4, 1), 1);
      t.pair(tgo(3, 1, 2), tgo(3, 1, 2), 1);
      break;
    default: fail(ErrorKind::UnsupportedK, "closed lists exist for k = 2..5");
  }
  for (int i = 1; i <= k - 1; ++i)
    for (int s = 0; s < i; ++s) t.pair(twogen(i, s), t.two(k - s, k - i));
  return std::move(t.choices);
}

std::vector<CyclicCode> closed_list(const Instance& inst) {
  std::vector<std::vector<Choice>> slots;
  Count total = 1;
  for (int j = 0; j < inst.fd.lambda; ++j) slots.push_back(self_reciprocal_rows(inst, j));
  for (int j = inst.fd.lambda; j < inst.fd.lambda + inst.fd.epsilon; ++j) slots.push_back(pair_rows(inst, j));
  for (const auto& s : slots) total *= s.size();
  if (total > Count(1) << 24) fail(ErrorKind::TooLarge, "more than 2^24 self-dual codes");
  std::vector<CyclicCode> out;
  std::vector<std::size_t> digit(slots.size(), 0);
  std::vector<IdealLabel> comps(static_cast<std::size_t>(inst.r()));
  for (auto n = static_cast<std::uint64_t>(total); n-- > 0;) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      for (const IdealLabel& L : slots[i][digit[i]]) comps[static_cast<std::size_t>(L.j)] = L;
    out.push_back(make_code(inst, comps));
    for (std::size_t i = slots.size(); i-- > 0;) {
      if (++digit[i] < slots[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<CyclicCode> selfdual_k2_list(const Instance& inst) {
  if (inst.k != 2) fail(ErrorKind::UnsupportedK, "the k = 2 list needs k = 2");
  return closed_list(inst);
}

std::vector<CyclicCode> selfdual_k345_list(const Instance& inst) {
  if (inst.k < 3 || inst.k > 5) fail(ErrorKind::UnsupportedK, "appendix lists cover k = 3, 4, 5");
  return closed_list(inst);
}

}  // namespace sdcyc
