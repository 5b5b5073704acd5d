#include <bit>
#include <vector>

#include "sdcyc/kernels/weight.hpp"

namespace sdcyc::kernels {

namespace {

inline unsigned word_weight(std::uint64_t v, unsigned m, std::uint64_t low) {
  std::uint64_t t = v;
  for (unsigned b = 1; b < m; ++b) t |= v >> b;
  return static_cast<unsigned>(std::popcount(t & low));
}

}  // namespace

void weights_scalar(const WeightJob& job, const std::uint64_t* starts, unsigned nstarts, std::uint64_t* hist) {
  const unsigned W = job.words;
  std::vector<std::uint64_t> cur(W);
  const std::uint64_t steps = 1ull << job.dim;
  for (unsigned s = 0; s < nstarts; ++s) {
    for (unsigned w = 0; w < W; ++w) cur[w] = starts[s * W + w];
    if (W == 1 && job.sym_bits == 1) {
      std::uint64_t v = cur[0];
      ++hist[std::popcount(v)];
      for (std::uint64_t i = 1; i < steps; ++i) {
        v ^= job.rows[std::countr_zero(i)];
        ++hist[std::popcount(v)];
      }
      continue;
    }
    auto weight = [&]() {
      unsigned wt = 0;
      for (unsigned w = 0; w < W; ++w) wt += word_weight(cur[w], job.sym_bits, job.low[w]);
      return wt;
    };
    ++hist[weight()];
    for (std::uint64_t i = 1; i < steps; ++i) {
      const std::uint64_t* r = job.rows + static_cast<std::size_t>(std::countr_zero(i)) * W;
      for (unsigned w = 0; w < W; ++w) cur[w] ^= r[w];
      ++hist[weight()];
    }
  }
}

}  // namespace sdcyc::kernels
