#include "sdcyc/f2space.hpp"

#include <algorithm>
#include <bit>

#include "sdcyc/errors.hpp"

namespace sdcyc {

namespace {
int pivot(Word v) { return 63 - std::countl_zero(v); }
Word mask_of(unsigned bits) { return bits >= 64 ? ~0ull : ((1ull << bits) - 1); }
}  // namespace

F2Subspace::F2Subspace(unsigned ambient_bits) : bits_(ambient_bits) {
  if (ambient_bits > 64) fail(ErrorKind::TooLarge, "F_2 subspaces are limited to 64 coordinates");
}

F2Subspace F2Subspace::span(const std::vector<Word>& vectors, unsigned ambient_bits) {
  F2Subspace s(ambient_bits);
  for (Word v : vectors) s.insert(v);
  return s;
}

F2Subspace F2Subspace::full(unsigned ambient_bits) {
  F2Subspace s(ambient_bits);
  for (unsigned b = 0; b < ambient_bits; ++b) s.insert(1ull << b);
  return s;
}

Word F2Subspace::reduce(Word v) const {
  for (Word b : basis_) {
    if ((v >> pivot(b)) & 1ull) v ^= b;
  }
  return v;
}

bool F2Subspace::insert(Word v) {
  if (v & ~mask_of(bits_)) fail(ErrorKind::OutOfRange, "vector outside the ambient space");
  v = reduce(v);
  if (v == 0) return false;
  const int p = pivot(v);
  for (Word& b : basis_) {
    if ((b >> p) & 1ull) b ^= v;
  }
  auto pos = std::find_if(basis_.begin(), basis_.end(), [p](Word b) { return pivot(b) < p; });
  basis_.insert(pos, v);
  return true;
}

bool F2Subspace::contains(const F2Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](Word v) { return contains(v); });
}

std::vector<Word> F2Subspace::elements() const {
  if (dim() > 24) fail(ErrorKind::TooLarge, "refusing to list more than 2^24 vectors");
  std::vector<Word> out(std::size_t{1} << dim());
  Word cur = 0;
  out[0] = 0;
  for (std::size_t i = 1; i < out.size(); ++i) {
    cur ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
    out[i] = cur;
  }
  std::sort(out.begin(), out.end());
  return out;
}

F2Subspace f2_sum(const F2Subspace& a, const F2Subspace& b) {
  F2Subspace s = a;
  for (Word v : b.basis()) s.insert(v);
  return s;
}

F2Subspace f2_kernel(const std::vector<Word>& rows, unsigned ambient_bits) {
  // Echelonize the rows, then read off a kernel basis from the free columns.
  F2Subspace rs = F2Subspace::span(rows, ambient_bits);
  const std::vector<Word>& basis = rs.basis();
  Word pivots = 0;
  for (Word b : basis) pivots |= 1ull << pivot(b);
  F2Subspace ker(ambient_bits);
  for (unsigned c = 0; c < ambient_bits; ++c) {
    if ((pivots >> c) & 1ull) continue;
    Word v = 1ull << c;
    for (Word b : basis) {
      if ((b >> c) & 1ull) v |= 1ull << pivot(b);
    }
    ker.insert(v);
  }
  return ker;
}

F2Subspace f2_orthogonal(const F2Subspace& a) { return f2_kernel(a.basis(), a.ambient_bits()); }

F2Subspace f2_intersect(const F2Subspace& a, const F2Subspace& b) {
  // a ∩ b = (a^perp + b^perp)^perp
  return f2_orthogonal(f2_sum(f2_orthogonal(a), f2_orthogonal(b)));
}

}  // namespace sdcyc
