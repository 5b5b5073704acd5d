#include "sdcyc/fqmatrix.hpp"

#include <algorithm>

namespace sdcyc {

void FqMatrix::append_row(const std::vector<Fq>& r) {
  if (rows == 0 && cols == 0) cols = r.size();
  if (r.size() != cols) fail(ErrorKind::InvalidArgument, "row length mismatch");
  a.insert(a.end(), r.begin(), r.end());
  ++rows;
}

FqMatrix fq_rref(const FieldCtx& ctx, FqMatrix m) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols && lead < m.rows; ++c) {
    std::size_t p = lead;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(lead, j));
    }
    const Fq inv = ctx.inv(m.at(lead, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(lead, j) = ctx.mul(m.at(lead, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == lead) continue;
      const Fq f = m.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) ^= ctx.mul(f, m.at(lead, j));
    }
    ++lead;
  }
  m.rows = lead;
  m.a.resize(lead * m.cols);
  return m;
}

std::size_t fq_rank(const FieldCtx& ctx, const FqMatrix& m) { return fq_rref(ctx, m).rows; }

FqMatrix fq_nullspace(const FieldCtx& ctx, const FqMatrix& m) {
  const FqMatrix r = fq_rref(ctx, m);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t i = 0; i < r.rows; ++i) {
    std::size_t c = 0;
    while (r.at(i, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  FqMatrix out(0, m.cols);
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fq> v(m.cols, 0);
    v[free] = 1;
    // char 2: x_pivot = sum of r[i][free] * x_free
    for (std::size_t i = 0; i < r.rows; ++i) v[pivot_col[i]] = r.at(i, free);
    out.append_row(v);
  }
  return out;
}

FqMatrix fq_mul_transpose(const FieldCtx& ctx, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols != b.cols) fail(ErrorKind::InvalidArgument, "column counts differ");
  FqMatrix out(a.rows, b.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.rows; ++j) {
      Fq acc = 0;
      for (std::size_t c = 0; c < a.cols; ++c) acc ^= ctx.mul(a.at(i, c), b.at(j, c));
      out.at(i, j) = acc;
    }
  }
  return out;
}

bool fq_is_zero(const FqMatrix& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](Fq v) { return v == 0; });
}

bool fq_row_in_span(const FieldCtx& ctx, const FqMatrix& rref, const std::vector<Fq>& v) {
  std::vector<Fq> w = v;
  for (std::size_t i = 0; i < rref.rows; ++i) {
    std::size_t c = 0;
    while (rref.at(i, c) == 0) ++c;
    const Fq f = w[c];
    if (f == 0) continue;
    for (std::size_t j = c; j < rref.cols; ++j) w[j] ^= ctx.mul(f, rref.at(i, j));
  }
  return std::all_of(w.begin(), w.end(), [](Fq x) { return x == 0; });
}

bool fq_same_row_space(const FieldCtx& ctx, const FqMatrix& a, const FqMatrix& b) {
  return a.cols == b.cols && fq_rref(ctx, a) == fq_rref(ctx, b);
}

FqMatrix fq_stack(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows == 0) return b.rows == 0 ? FqMatrix(0, std::max(a.cols, b.cols)) : b;
  if (b.rows == 0) return a;
  if (a.cols != b.cols) fail(ErrorKind::InvalidArgument, "column counts differ");
  FqMatrix out = a;
  out.a.insert(out.a.end(), b.a.begin(), b.a.end());
  out.rows += b.rows;
  return out;
}

FqMatrix fq_intersect(const FieldCtx& ctx, const FqMatrix& a, const FqMatrix& b) {
  // A n B = (A^perp + B^perp)^perp; valid for the symmetric dot product
  return fq_rref(ctx, fq_nullspace(ctx, fq_stack(fq_nullspace(ctx, a), fq_nullspace(ctx, b))));
}

}  // namespace sdcyc
