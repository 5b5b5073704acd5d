#include "sdcyc/gray.hpp"

#include "sdcyc/duality.hpp"
#include "sdcyc/selfdual.hpp"

namespace sdcyc {

namespace {

void require_k2(int k) {
  if (k != 2) fail(ErrorKind::UnsupportedK, "the Gray map is defined for k = 2");
}

// (left | right) with d shifted copies of each side
void append_block(FqMatrix& g, const Poly& left, const Poly& right, std::size_t d, std::size_t len) {
  const FqMatrix l = circulant(left, d, len), r = circulant(right, d, len);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Fq> row = l.row(i);
    const std::vector<Fq> rr = r.row(i);
    row.insert(row.end(), rr.begin(), rr.end());
    g.append_row(row);
  }
}

}  // namespace

std::vector<Fq> gray_map(const std::vector<Poly>& xi, std::size_t len) {
  if (xi.size() > 2) {
    for (std::size_t l = 2; l < xi.size(); ++l)
      if (!xi[l].is_zero()) fail(ErrorKind::UnsupportedK, "the Gray map needs k = 2 words");
  }
  const Poly zero;
  const Poly& a = xi.size() > 0 ? xi[0] : zero;
  const Poly& b = xi.size() > 1 ? xi[1] : zero;
  if (a.degree() >= static_cast<int>(len) || b.degree() >= static_cast<int>(len)) {
    fail(ErrorKind::OutOfRange, "polynomial longer than the code length");
  }
  std::vector<Fq> out(2 * len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = b.coeff(i);
    out[len + i] = a.coeff(i) ^ b.coeff(i);
  }
  return out;
}

unsigned lee_weight(Fq a, Fq b) { return (b != 0 ? 1u : 0u) + ((a ^ b) != 0 ? 1u : 0u); }

FqMatrix circulant(const Poly& a, std::size_t s, std::size_t len) {
  if (s < 1) fail(ErrorKind::OutOfRange, "circulant needs s >= 1");
  FqMatrix out(s, len);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t r = 0; r < s; ++r) out.at(r, (i + r) % len) ^= a.c[i];
  }
  return out;
}

FqMatrix generator_matrix(const CyclicCode& code, const Instance& inst) {
  require_k2(inst.k);
  if (!is_self_dual(code, inst)) fail(ErrorKind::NotSelfDual, "block generator matrices need a self-dual code");
  const std::size_t len = 2 * static_cast<std::size_t>(inst.n);
  const Poly big = inst.fd.ambient_modulus();
  const FieldCtx& F = inst.field;
  FqMatrix g(0, 2 * len);
  for (const IdealLabel& L : code.components) {
    const auto d = static_cast<std::size_t>(inst.fd.degree(L.j));
    const Poly& e = inst.idem.eps[static_cast<std::size_t>(L.j)];
    const Poly fe = poly_mulmod(F, inst.fd.factor(L.j), e, big);
    const Poly none;
    switch (k2_kind(L)) {
      case K2Kind::Zero: break;
      case K2Kind::One:
        append_block(g, none, e, d, len);
        append_block(g, e, e, d, len);
        append_block(g, none, fe, d, len);
        append_block(g, fe, fe, d, len);
        break;
      case K2Kind::U:
        append_block(g, e, e, d, len);
        append_block(g, fe, fe, d, len);
        break;
      case K2Kind::F:
        append_block(g, none, fe, d, len);
        append_block(g, fe, fe, d, len);
        break;
      case K2Kind::UF: append_block(g, fe, fe, d, len); break;
      case K2Kind::UAndF:
        append_block(g, e, e, d, len);
        append_block(g, fe, fe, d, len);
        append_block(g, none, fe, d, len);
        break;
      case K2Kind::UPlusF: {
        const Poly w = unpack(L.omega.at(0), F.m());
        const Poly right = poly_add(e, poly_mulmod(F, fe, w, big));  // (1 + f w) eps
        append_block(g, e, right, d, len);
        append_block(g, fe, fe, d, len);
        break;
      }
    }
  }
  return g;
}

FqMatrix span_generator_matrix(const CyclicCode& code, const Instance& inst) {
  require_k2(inst.k);
  const std::size_t len = 2 * static_cast<std::size_t>(inst.n);
  FqMatrix g(0, 2 * len);
  for (const auto& gen : code_generators(code, inst)) {
    const Poly a = gen.at(0), b = gen.size() > 1 ? gen[1] : Poly();
    for (std::size_t i = 0; i < len; ++i) {
      const Poly xa = poly_shift_cyclic(a, i, len);
      g.append_row(gray_map({xa, poly_shift_cyclic(b, i, len)}, len));
      g.append_row(gray_map({Poly(), xa}, len));  // u x^i g
    }
  }
  return fq_rref(inst.field, g);
}

FqMatrix dense_generator_matrix(const DenseCode& code) {
  const RingSpace& sp = *code.space;
  require_k2(sp.k());
  if (!sp.is_cyclic()) fail(ErrorKind::InvalidArgument, "Gray images need the cyclic ambient");
  const auto len = static_cast<std::size_t>(sp.degree());
  FqMatrix g(0, 2 * len);
  for (Word w : code.sub.basis()) g.append_row(gray_map(sp.decode(w), len));
  return fq_rref(sp.field(), g);
}

std::uint64_t WeightDist::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts) t += c;
  return t;
}

WeightDist weight_distribution(const FqMatrix& g0, const FieldCtx& ctx, const WeightOptions& opt) {
  const FqMatrix g = fq_rref(ctx, g0);
  const unsigned m = ctx.m();
  const std::size_t N = g0.cols;
  if (static_cast<unsigned long long>(g.rows) * m > 32) fail(ErrorKind::TooLarge, "message space beyond 2^32");
  const unsigned per_word = 64 / m;
  const auto words = static_cast<unsigned>((N + per_word - 1) / per_word);
  WeightDist wd;
  wd.counts.assign(N + 1, 0);
  if (g.rows == 0) {
    wd.counts[0] = 1;
    return wd;
  }
  std::vector<std::uint64_t> low(words, 0), rows;
  for (std::size_t c = 0; c < N; ++c) low[c / per_word] |= 1ull << ((c % per_word) * m);
  // F_2 generators y^t g_i
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (unsigned t = 0; t < m; ++t) {
      std::vector<std::uint64_t> packed(words, 0);
      for (std::size_t c = 0; c < N; ++c) {
        const Fq v = ctx.mul(g.at(i, c), Fq{1} << t);
        packed[c / per_word] |= static_cast<std::uint64_t>(v) << ((c % per_word) * m);
      }
      rows.insert(rows.end(), packed.begin(), packed.end());
    }
  }
  const auto dim = static_cast<unsigned>(g.rows) * m;
  const std::vector<std::uint64_t> hist = kernels::weight_histogram(rows, dim, words, m, low, opt.isa, opt.threads);
  for (std::size_t w = 0; w < hist.size(); ++w) {
    if (hist[w] == 0) continue;
    if (w > N) throw std::logic_error("weight beyond code length");
    wd.counts[w] = hist[w];
  }
  return wd;
}

unsigned min_distance(const WeightDist& wd) {
  for (std::size_t w = 1; w < wd.counts.size(); ++w)
    if (wd.counts[w] != 0) return static_cast<unsigned>(w);
  fail(ErrorKind::MinDistOfTrivial, "the zero code has no minimum distance");
}

unsigned min_distance(const FqMatrix& g, const FieldCtx& ctx, const WeightOptions& opt) {
  return min_distance(weight_distribution(g, ctx, opt));
}

bool is_2_quasi_cyclic(const FqMatrix& g, const FieldCtx& ctx) {
  if (g.cols % 2 != 0) fail(ErrorKind::InvalidArgument, "length must be even");
  const std::size_t h = g.cols / 2;
  const FqMatrix r = fq_rref(ctx, g);
  for (std::size_t i = 0; i < g.rows; ++i) {
    std::vector<Fq> s(g.cols);
    for (std::size_t c = 0; c < h; ++c) {
      s[(c + 1) % h] = g.at(i, c);
      s[h + (c + 1) % h] = g.at(i, h + c);
    }
    if (!fq_row_in_span(ctx, r, s)) return false;
  }
  return true;
}

WeightDist lee_distribution(const DenseCode& code) {
  const RingSpace& sp = *code.space;
  require_k2(sp.k());
  const auto len = static_cast<std::size_t>(sp.degree());
  WeightDist wd;
  wd.counts.assign(2 * len + 1, 0);
  for (Word w : code.members()) {
    const std::vector<Poly> ab = sp.decode(w);
    unsigned lee = 0;
    for (std::size_t i = 0; i < len; ++i) lee += lee_weight(ab[0].coeff(i), ab[1].coeff(i));
    ++wd.counts[lee];
  }
  return wd;
}

}  // namespace sdcyc
