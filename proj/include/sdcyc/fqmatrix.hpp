#pragma once

#include <cstddef>
#include <vector>

#include "sdcyc/gf.hpp"

namespace sdcyc {

// Dense row-major matrix over F_{2^m}.
struct FqMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Fq> a;

  FqMatrix() = default;
  FqMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  Fq& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Fq at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  std::vector<Fq> row(std::size_t i) const { return {a.begin() + static_cast<std::ptrdiff_t>(i * cols), a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)}; }
  void append_row(const std::vector<Fq>& r);

  bool operator==(const FqMatrix& o) const = default;
};

// Reduced row echelon form with zero rows dropped.
FqMatrix fq_rref(const FieldCtx& ctx, FqMatrix m);
std::size_t fq_rank(const FieldCtx& ctx, const FqMatrix& m);
// Basis of {v : M v^T = 0}.
FqMatrix fq_nullspace(const FieldCtx& ctx, const FqMatrix& m);
// A * B^T
FqMatrix fq_mul_transpose(const FieldCtx& ctx, const FqMatrix& a, const FqMatrix& b);
bool fq_is_zero(const FqMatrix& m);
bool fq_row_in_span(const FieldCtx& ctx, const FqMatrix& rref, const std::vector<Fq>& v);
bool fq_same_row_space(const FieldCtx& ctx, const FqMatrix& a, const FqMatrix& b);
FqMatrix fq_stack(const FqMatrix& a, const FqMatrix& b);
FqMatrix fq_intersect(const FieldCtx& ctx, const FqMatrix& a, const FqMatrix& b);

}  // namespace sdcyc
