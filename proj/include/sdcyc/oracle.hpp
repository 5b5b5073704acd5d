#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sdcyc/f2space.hpp"
#include "sdcyc/gf.hpp"

namespace sdcyc {

// The ring F_{2^m}[x]/<g>[u]/<u^k> viewed as F_2^N with N = k * deg g * m.
// Bit index of coefficient bit b of (u^l x^i) is ((l * deg g) + i) * m + b.
class RingSpace {
 public:
  RingSpace(FieldCtx ctx, Poly g, int k);

  // Ambient ring of cyclic codes of length 2n.
  static std::shared_ptr<const RingSpace> cyclic(const FieldCtx& ctx, int n, int k);

  const FieldCtx& field() const { return ctx_; }
  const Poly& modulus() const { return g_; }
  int k() const { return k_; }
  int degree() const { return g_.degree(); }
  unsigned bits() const { return bits_; }
  // True when g = x^L - 1, so x-powers are the code coordinates.
  bool is_cyclic() const { return cyclic_; }

  Word encode(const std::vector<Poly>& ucoeffs) const;
  std::vector<Poly> decode(Word w) const;

  Word mul_x(Word w) const { return apply(x_images_, w); }
  Word mul_u(Word w) const { return apply(u_images_, w); }
  Word mul_scalar(Word w, Fq a) const;
  Word mul(Word a, Word b) const;

  // Euclidean inner product sum_i alpha_i beta_i in F_{2^m}[u]/<u^k>, packed as k*m bits.
  Word inner_product(Word a, Word b) const;

 private:
  static Word apply(const std::vector<Word>& images, Word w);

  FieldCtx ctx_;
  Poly g_;
  int k_;
  unsigned bits_;
  bool cyclic_;
  std::vector<Word> x_images_;
  std::vector<Word> u_images_;
  std::vector<std::vector<Word>> scalar_images_;  // by basis scalar y^t
};

// An R-submodule held explicitly as an F_2-subspace of the ambient ring.
struct DenseCode {
  std::shared_ptr<const RingSpace> space;
  F2Subspace sub;

  unsigned log2_size() const { return sub.dim(); }
  std::vector<Word> members() const { return sub.elements(); }
  bool operator==(const DenseCode& o) const { return sub == o.sub; }
};

// Enumeration cap for anything that lists ambient vectors.
constexpr unsigned kOracleEnumBits = 24;

DenseCode span_code(std::shared_ptr<const RingSpace> space, const std::vector<Word>& generators);
DenseCode span_code(std::shared_ptr<const RingSpace> space, const std::vector<std::vector<Poly>>& generators);

// Orthogonal complement by linear algebra over F_2: for each basis codeword
// alpha, every coefficient bit of [alpha, .] is a linear functional.
DenseCode brute_dual(const DenseCode& c);
// Literal scan of the ambient space; ambient bits <= 24.
DenseCode brute_dual_scan(const DenseCode& c);
DenseCode brute_intersect(const DenseCode& a, const DenseCode& b);
bool brute_is_selfdual(const DenseCode& c);

// All ideals of the ring: distinct principal ideals, closed under pairwise sums.
std::vector<DenseCode> brute_all_ideals(std::shared_ptr<const RingSpace> space);
// Principal ideals by explicit member-set closure; ambient bits <= 12.
std::vector<std::vector<Word>> principal_ideals_setwise(const RingSpace& space);

}  // namespace sdcyc
