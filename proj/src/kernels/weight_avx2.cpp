#include <immintrin.h>

#include <bit>

#include "sdcyc/kernels/weight.hpp"

namespace sdcyc::kernels {

namespace {

// Per-lane popcount of four 64-bit words: nibble lookup, then horizontal byte sums.
__attribute__((target("avx2"))) inline __m256i popcnt4(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i nib = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, nib);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi64(v, 4), nib);
  const __m256i c = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(c, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) inline __m256i fold(__m256i v, unsigned m, __m256i low) {
  __m256i t = v;
  for (unsigned b = 1; b < m; ++b) t = _mm256_or_si256(t, _mm256_srl_epi64(v, _mm_cvtsi32_si128(static_cast<int>(b))));
  return _mm256_and_si256(t, low);
}

__attribute__((target("avx2"))) inline void tally(__m256i counts, std::uint64_t* hist) {
  alignas(32) std::uint64_t c[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(c), counts);
  ++hist[c[0]];
  ++hist[c[1]];
  ++hist[c[2]];
  ++hist[c[3]];
}

__attribute__((target("avx2"))) inline __m256i weight4(const __m256i* cur, const __m256i* low, unsigned W, unsigned m) {
  __m256i acc = _mm256_setzero_si256();
  for (unsigned w = 0; w < W; ++w) acc = _mm256_add_epi64(acc, popcnt4(fold(cur[w], m, low[w])));
  return acc;
}

}  // namespace

__attribute__((target("avx2"))) void weights_avx2(const WeightJob& job, const std::uint64_t* starts, unsigned nstarts,
                                                 std::uint64_t* hist) {
  const unsigned W = job.words;
  const std::uint64_t steps = 1ull << job.dim;
  __m256i cur[kMaxWords], low[kMaxWords];
  for (unsigned w = 0; w < W; ++w) low[w] = _mm256_set1_epi64x(static_cast<long long>(job.low[w]));
  for (unsigned s = 0; s + 4 <= nstarts; s += 4) {
    // lane l walks from start s + l
    for (unsigned w = 0; w < W; ++w) {
      cur[w] = _mm256_setr_epi64x(static_cast<long long>(starts[(s + 0) * W + w]), static_cast<long long>(starts[(s + 1) * W + w]),
                                  static_cast<long long>(starts[(s + 2) * W + w]), static_cast<long long>(starts[(s + 3) * W + w]));
    }
    if (W == 1 && job.sym_bits == 1) {
      __m256i v = cur[0];
      tally(popcnt4(v), hist);
      for (std::uint64_t i = 1; i < steps; ++i) {
        v = _mm256_xor_si256(v, _mm256_set1_epi64x(static_cast<long long>(job.rows[std::countr_zero(i)])));
        tally(popcnt4(v), hist);
      }
      continue;
    }
    tally(weight4(cur, low, W, job.sym_bits), hist);
    for (std::uint64_t i = 1; i < steps; ++i) {
      const std::uint64_t* r = job.rows + static_cast<std::size_t>(std::countr_zero(i)) * W;
      for (unsigned w = 0; w < W; ++w) cur[w] = _mm256_xor_si256(cur[w], _mm256_set1_epi64x(static_cast<long long>(r[w])));
      tally(weight4(cur, low, W, job.sym_bits), hist);
    }
  }
}

}  // namespace sdcyc::kernels
