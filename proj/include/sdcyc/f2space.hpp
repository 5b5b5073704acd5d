#pragma once

#include <cstdint>
#include <vector>

namespace sdcyc {

using Word = std::uint64_t;

// Subspace of F_2^N (N <= 64) held as a fully reduced echelon basis, so two
// subspaces are equal iff their basis vectors are equal.
class F2Subspace {
 public:
  explicit F2Subspace(unsigned ambient_bits = 0);

  static F2Subspace span(const std::vector<Word>& vectors, unsigned ambient_bits);
  static F2Subspace full(unsigned ambient_bits);

  unsigned ambient_bits() const { return bits_; }
  unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
  // Sorted by descending pivot (highest set bit).
  const std::vector<Word>& basis() const { return basis_; }

  Word reduce(Word v) const;
  bool contains(Word v) const { return reduce(v) == 0; }
  bool insert(Word v);
  bool contains(const F2Subspace& other) const;

  // All 2^dim members, ascending; refuses dim > 24.
  std::vector<Word> elements() const;

  bool operator==(const F2Subspace& o) const { return bits_ == o.bits_ && basis_ == o.basis_; }
  bool operator<(const F2Subspace& o) const { return basis_ < o.basis_; }

 private:
  unsigned bits_;
  std::vector<Word> basis_;
};

F2Subspace f2_sum(const F2Subspace& a, const F2Subspace& b);
F2Subspace f2_intersect(const F2Subspace& a, const F2Subspace& b);
// Complement under the standard dot product of F_2^N.
F2Subspace f2_orthogonal(const F2Subspace& a);
// Common kernel of the functionals v -> popcount(row & v) mod 2.
F2Subspace f2_kernel(const std::vector<Word>& rows, unsigned ambient_bits);

}  // namespace sdcyc
