#pragma once

#include <cstdint>
#include <vector>

namespace sdcyc::kernels {

constexpr unsigned kMaxWords = 16;

// Codewords are `words` 64-bit words; symbol weight counts nonzero m-bit
// symbols, where `low` marks the lowest bit of every symbol slot.
struct WeightJob {
  const std::uint64_t* rows;    // dim rows, row r at rows[r * words]
  unsigned dim;                 // rows walked in Gray-code order
  unsigned words;
  unsigned sym_bits;            // m
  const std::uint64_t* low;     // words entries
};

// For each start vector s, adds the weight of s + (every combination of the
// rows) to hist. hist must hold 64 * words + 1 counters.
void weights_scalar(const WeightJob& job, const std::uint64_t* starts, unsigned nstarts, std::uint64_t* hist);
// nstarts must be a multiple of 4.
void weights_avx2(const WeightJob& job, const std::uint64_t* starts, unsigned nstarts, std::uint64_t* hist);

enum class Isa { Scalar, Avx2 };

bool avx2_supported();
// Best supported ISA, unless SDCYC_ISA=scalar forces the reference path.
Isa default_isa();
const char* isa_name(Isa isa);

// Full histogram over the F_2 span of `dim` rows; the top rows are split into
// independent start vectors and spread over `threads` workers.
std::vector<std::uint64_t> weight_histogram(const std::vector<std::uint64_t>& rows, unsigned dim, unsigned words,
                                            unsigned sym_bits, const std::vector<std::uint64_t>& low, Isa isa,
                                            unsigned threads);

// SDCYC_THREADS, else hardware concurrency.
unsigned default_threads();

}  // namespace sdcyc::kernels
