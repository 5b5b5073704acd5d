#pragma once

#include <cstdint>
#include <vector>

#include "sdcyc/fqmatrix.hpp"
#include "sdcyc/ideals.hpp"
#include "sdcyc/kernels/weight.hpp"

namespace sdcyc {

// phi(a + b u) = (b, a + b), coordinatewise: (b_0..b_{L-1} | a_0+b_0 .. a_{L-1}+b_{L-1}).
// xi holds the u-coefficients (a, b) as polynomials of degree < len.
std::vector<Fq> gray_map(const std::vector<Poly>& xi, std::size_t len);
// Hamming weight of (b, a + b)
unsigned lee_weight(Fq a, Fq b);

// Rows x^i a(x) mod x^len - 1 for i < s.
FqMatrix circulant(const Poly& a, std::size_t s, std::size_t len);

// Block generator matrix of phi(C) for a self-dual C (k = 2).
FqMatrix generator_matrix(const CyclicCode& code, const Instance& inst);
// Generator matrix of phi(C) for any k = 2 code: phi of x^i u^e eps_j g over
// every listed generator g, reduced to echelon form.
FqMatrix span_generator_matrix(const CyclicCode& code, const Instance& inst);
// Same, from an explicit F_2 basis held by the oracle.
FqMatrix dense_generator_matrix(const DenseCode& code);

// counts[w] = number of codewords of Hamming weight w, w = 0..cols.
struct WeightDist {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  bool operator==(const WeightDist&) const = default;
};

struct WeightOptions {
  kernels::Isa isa = kernels::default_isa();
  unsigned threads = kernels::default_threads();
};

// Exhaustive over the message space; m * rank <= 32.
WeightDist weight_distribution(const FqMatrix& g, const FieldCtx& ctx, const WeightOptions& opt = {});
unsigned min_distance(const WeightDist& wd);
unsigned min_distance(const FqMatrix& g, const FieldCtx& ctx, const WeightOptions& opt = {});

// Shift-by-one of both halves keeps every row inside the row space.
bool is_2_quasi_cyclic(const FqMatrix& g, const FieldCtx& ctx);

// Lee weight census of an explicit k = 2 code.
WeightDist lee_distribution(const DenseCode& code);

}  // namespace sdcyc
