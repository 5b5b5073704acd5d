#include "sdcyc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace sdcyc {

RingSpace::RingSpace(FieldCtx ctx, Poly g, int k) : ctx_(std::move(ctx)), g_(std::move(g)), k_(k) {
  if (g_.degree() < 1) fail(ErrorKind::DegreeZero, "ring modulus must have positive degree");
  if (k_ < 1) fail(ErrorKind::OutOfRange, "k must be >= 1");
  g_ = poly_monic(ctx_, g_);
  const unsigned long long total =
      static_cast<unsigned long long>(k_) * static_cast<unsigned long long>(g_.degree()) * ctx_.m();
  if (total > 64) fail(ErrorKind::TooLarge, "ring needs " + std::to_string(total) + " bits, limit is 64");
  bits_ = static_cast<unsigned>(total);

  const int D = g_.degree();
  cyclic_ = g_.coeff(0) == 1;
  for (int i = 1; i < D; ++i) cyclic_ = cyclic_ && g_.coeff(static_cast<std::size_t>(i)) == 0;

  const unsigned m = ctx_.m();
  x_images_.assign(bits_, 0);
  u_images_.assign(bits_, 0);
  scalar_images_.assign(m, std::vector<Word>(bits_, 0));
  for (int l = 0; l < k_; ++l) {
    for (int i = 0; i < D; ++i) {
      for (unsigned t = 0; t < m; ++t) {
        const unsigned b = (static_cast<unsigned>(l * D + i)) * m + t;
        const Fq coef = 1u << t;
        std::vector<Poly> elem(static_cast<std::size_t>(k_));
        elem[static_cast<std::size_t>(l)] = poly_mod(ctx_, Poly::monomial(static_cast<std::size_t>(i) + 1, coef), g_);
        x_images_[b] = encode(elem);
        if (l + 1 < k_) {
          std::vector<Poly> up(static_cast<std::size_t>(k_));
          up[static_cast<std::size_t>(l) + 1] = Poly::monomial(static_cast<std::size_t>(i), coef);
          u_images_[b] = encode(up);
        }
        for (unsigned s = 0; s < m; ++s) {
          std::vector<Poly> sc(static_cast<std::size_t>(k_));
          sc[static_cast<std::size_t>(l)] = Poly::monomial(static_cast<std::size_t>(i), ctx_.mul(coef, 1u << s));
          scalar_images_[s][b] = encode(sc);
        }
      }
    }
  }
}

std::shared_ptr<const RingSpace> RingSpace::cyclic(const FieldCtx& ctx, int n, int k) {
  const Poly g = poly_add(Poly::monomial(2 * static_cast<std::size_t>(n)), Poly::constant(1));
  return std::make_shared<RingSpace>(ctx, g, k);
}

Word RingSpace::apply(const std::vector<Word>& images, Word w) {
  Word out = 0;
  while (w) {
    const int b = std::countr_zero(w);
    out ^= images[static_cast<std::size_t>(b)];
    w &= w - 1;
  }
  return out;
}

Word RingSpace::encode(const std::vector<Poly>& ucoeffs) const {
  const int D = degree();
  const unsigned m = ctx_.m();
  Word w = 0;
  for (std::size_t l = 0; l < ucoeffs.size(); ++l) {
    if (static_cast<int>(l) >= k_) {
      if (!ucoeffs[l].is_zero()) fail(ErrorKind::OutOfRange, "u-degree beyond k-1");
      continue;
    }
    const Poly p = poly_mod(ctx_, ucoeffs[l], g_);
    for (std::size_t i = 0; i < p.c.size(); ++i) {
      w |= static_cast<Word>(p.c[i]) << ((l * static_cast<std::size_t>(D) + i) * m);
    }
  }
  return w;
}

std::vector<Poly> RingSpace::decode(Word w) const {
  const int D = degree();
  const unsigned m = ctx_.m();
  const Word mask = (1ull << m) - 1;
  std::vector<Poly> out(static_cast<std::size_t>(k_));
  for (int l = 0; l < k_; ++l) {
    std::vector<Fq> c(static_cast<std::size_t>(D));
    for (int i = 0; i < D; ++i) c[static_cast<std::size_t>(i)] = static_cast<Fq>((w >> ((l * D + i) * m)) & mask);
    out[static_cast<std::size_t>(l)] = Poly(std::move(c));
  }
  return out;
}

Word RingSpace::mul_scalar(Word w, Fq a) const {
  Word out = 0;
  for (unsigned s = 0; s < ctx_.m(); ++s) {
    if ((a >> s) & 1u) out ^= apply(scalar_images_[s], w);
  }
  return out;
}

Word RingSpace::mul(Word a, Word b) const {
  const std::vector<Poly> pa = decode(a), pb = decode(b);
  std::vector<Poly> c(static_cast<std::size_t>(k_));
  for (int l1 = 0; l1 < k_; ++l1) {
    for (int l2 = 0; l1 + l2 < k_; ++l2) {
      c[static_cast<std::size_t>(l1 + l2)] =
          poly_add(c[static_cast<std::size_t>(l1 + l2)], poly_mulmod(ctx_, pa[static_cast<std::size_t>(l1)], pb[static_cast<std::size_t>(l2)], g_));
    }
  }
  return encode(c);
}

Word RingSpace::inner_product(Word a, Word b) const {
  if (!cyclic_) fail(ErrorKind::InvalidArgument, "inner product needs the cyclic ambient x^L - 1");
  const std::vector<Poly> pa = decode(a), pb = decode(b);
  const int D = degree();
  const unsigned m = ctx_.m();
  Word out = 0;
  for (int l1 = 0; l1 < k_; ++l1) {
    for (int l2 = 0; l1 + l2 < k_; ++l2) {
      Fq acc = 0;
      for (int i = 0; i < D; ++i) {
        acc ^= ctx_.mul(pa[static_cast<std::size_t>(l1)].coeff(static_cast<std::size_t>(i)),
                        pb[static_cast<std::size_t>(l2)].coeff(static_cast<std::size_t>(i)));
      }
      out ^= static_cast<Word>(acc) << (static_cast<unsigned>(l1 + l2) * m);
    }
  }
  return out;
}

DenseCode span_code(std::shared_ptr<const RingSpace> space, const std::vector<Word>& generators) {
  F2Subspace sub(space->bits());
  std::deque<Word> queue;
  auto push = [&](Word v) {
    const Word r = sub.reduce(v);
    if (r != 0) {
      sub.insert(r);
      queue.push_back(r);
    }
  };
  for (Word g : generators) push(g);
  while (!queue.empty()) {
    const Word v = queue.front();
    queue.pop_front();
    push(space->mul_x(v));
    push(space->mul_u(v));
    for (unsigned s = 1; s < space->field().m(); ++s) push(space->mul_scalar(v, 1u << s));
  }
  return DenseCode{std::move(space), std::move(sub)};
}

DenseCode span_code(std::shared_ptr<const RingSpace> space, const std::vector<std::vector<Poly>>& generators) {
  std::vector<Word> words;
  for (const auto& g : generators) words.push_back(space->encode(g));
  return span_code(std::move(space), words);
}

namespace {
void check_dual_dims(const DenseCode& c, const DenseCode& d) {
  if (c.sub.dim() + d.sub.dim() != c.space->bits()) {
    throw std::logic_error("oracle: |C| * |C^perp| differs from the ambient size");
  }
}
}  // namespace

DenseCode brute_dual(const DenseCode& c) {
  const RingSpace& sp = *c.space;
  const unsigned out_bits = static_cast<unsigned>(sp.k()) * sp.field().m();
  std::vector<Word> rows;
  for (Word alpha : c.sub.basis()) {
    std::vector<Word> func(out_bits, 0);
    for (unsigned t = 0; t < sp.bits(); ++t) {
      const Word ip = sp.inner_product(alpha, 1ull << t);
      for (unsigned o = 0; o < out_bits; ++o) {
        if ((ip >> o) & 1ull) func[o] |= 1ull << t;
      }
    }
    rows.insert(rows.end(), func.begin(), func.end());
  }
  DenseCode d{c.space, f2_kernel(rows, sp.bits())};
  check_dual_dims(c, d);
  return d;
}

DenseCode brute_dual_scan(const DenseCode& c) {
  const RingSpace& sp = *c.space;
  if (sp.bits() > kOracleEnumBits) fail(ErrorKind::TooLarge, "ambient space too large to scan");
  F2Subspace d(sp.bits());
  const Word limit = 1ull << sp.bits();
  for (Word v = 1; v < limit; ++v) {
    bool orth = true;
    for (Word alpha : c.sub.basis()) {
      if (sp.inner_product(alpha, v) != 0) {
        orth = false;
        break;
      }
    }
    if (orth) d.insert(v);
  }
  DenseCode out{c.space, std::move(d)};
  check_dual_dims(c, out);
  return out;
}

DenseCode brute_intersect(const DenseCode& a, const DenseCode& b) {
  if (a.space->bits() != b.space->bits()) fail(ErrorKind::BaseMismatch, "codes over different ambients");
  return DenseCode{a.space, f2_intersect(a.sub, b.sub)};
}

bool brute_is_selfdual(const DenseCode& c) { return brute_dual(c) == c; }

std::vector<DenseCode> brute_all_ideals(std::shared_ptr<const RingSpace> space) {
  if (space->bits() > kOracleEnumBits) fail(ErrorKind::TooLarge, "ambient space too large for ideal census");
  std::set<std::vector<Word>> seen_principal;
  std::vector<F2Subspace> principal;
  const Word limit = 1ull << space->bits();
  for (Word v = 1; v < limit; ++v) {
    DenseCode p = span_code(space, std::vector<Word>{v});
    if (seen_principal.insert(p.sub.basis()).second) principal.push_back(std::move(p.sub));
  }
  std::map<std::vector<Word>, F2Subspace> all;
  std::deque<F2Subspace> work;
  F2Subspace zero(space->bits());
  all.emplace(zero.basis(), zero);
  work.push_back(zero);
  while (!work.empty()) {
    const F2Subspace cur = work.front();
    work.pop_front();
    for (const F2Subspace& p : principal) {
      F2Subspace s = f2_sum(cur, p);
      if (all.emplace(s.basis(), s).second) work.push_back(s);
    }
  }
  std::vector<DenseCode> out;
  for (auto& [key, sub] : all) out.push_back(DenseCode{space, sub});
  return out;
}

std::vector<std::vector<Word>> principal_ideals_setwise(const RingSpace& space) {
  if (space.bits() > 12) fail(ErrorKind::TooLarge, "setwise closure limited to 2^12 elements");
  std::vector<Word> multipliers;
  {
    std::vector<Poly> xe(static_cast<std::size_t>(space.k()));
    xe[0] = Poly::monomial(1);
    multipliers.push_back(space.encode(xe));
    if (space.k() > 1) {
      std::vector<Poly> ue(static_cast<std::size_t>(space.k()));
      ue[1] = Poly::constant(1);
      multipliers.push_back(space.encode(ue));
    }
    for (unsigned s = 1; s < space.field().m(); ++s) {
      std::vector<Poly> se(static_cast<std::size_t>(space.k()));
      se[0] = Poly::constant(1u << s);
      multipliers.push_back(space.encode(se));
    }
  }
  std::set<std::vector<Word>> out;
  const Word limit = 1ull << space.bits();
  for (Word v = 1; v < limit; ++v) {
    std::set<Word> members{0};
    std::deque<Word> pending{v};
    while (!pending.empty()) {
      const Word w = pending.front();
      pending.pop_front();
      if (members.count(w)) continue;
      std::vector<Word> added;
      for (Word s : members) added.push_back(s ^ w);
      members.insert(added.begin(), added.end());
      for (Word mlt : multipliers) pending.push_back(space.mul(mlt, w));
    }
    out.insert(std::vector<Word>(members.begin(), members.end()));
  }
  return {out.begin(), out.end()};
}

}  // namespace sdcyc
