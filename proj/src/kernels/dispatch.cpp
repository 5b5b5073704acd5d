#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "sdcyc/errors.hpp"
#include "sdcyc/kernels/weight.hpp"

namespace sdcyc::kernels {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa default_isa() {
  if (const char* env = std::getenv("SDCYC_ISA"); env && std::string(env) == "scalar") return Isa::Scalar;
  return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

unsigned default_threads() {
  if (const char* env = std::getenv("SDCYC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::uint64_t> weight_histogram(const std::vector<std::uint64_t>& rows, unsigned dim, unsigned words,
                                            unsigned sym_bits, const std::vector<std::uint64_t>& low, Isa isa,
                                            unsigned threads) {
  if (dim > 40) fail(ErrorKind::TooLarge, "message space beyond 2^40");
  if (words == 0 || words > kMaxWords) fail(ErrorKind::TooLarge, "codewords wider than 1024 bits");
  if (rows.size() != static_cast<std::size_t>(dim) * words || low.size() != words) {
    fail(ErrorKind::InvalidArgument, "row buffer does not match dim * words");
  }
  if (isa == Isa::Avx2 && !avx2_supported()) isa = Isa::Scalar;
  threads = std::max(1u, threads);

  // Split off the top `split` rows: 2^split start vectors, each walking the low rows.
  const unsigned split = std::min(dim, dim > 16 ? 8u : 2u);
  const unsigned low_dim = dim - split;
  const unsigned nstarts = 1u << split;
  std::vector<std::uint64_t> starts(static_cast<std::size_t>(nstarts) * words, 0);
  for (unsigned s = 1; s < nstarts; ++s) {
    const unsigned b = static_cast<unsigned>(__builtin_ctz(s));
    const unsigned prev = s & (s - 1);
    for (unsigned w = 0; w < words; ++w) {
      starts[s * words + w] = starts[prev * words + w] ^ rows[(low_dim + b) * words + w];
    }
  }

  const std::size_t hsize = 64 * static_cast<std::size_t>(words) + 1;
  const WeightJob job{rows.data(), low_dim, words, sym_bits, low.data()};
  // Work unit: a group of 4 starts (one AVX2 register of lanes).
  const unsigned groups = (nstarts + 3) / 4;
  threads = std::min(threads, groups);
  std::vector<std::vector<std::uint64_t>> hist(threads, std::vector<std::uint64_t>(hsize, 0));
  auto run = [&](unsigned t) {
    for (unsigned g = t; g < groups; g += threads) {
      const unsigned first = g * 4;
      const unsigned count = std::min(4u, nstarts - first);
      const std::uint64_t* sp = starts.data() + static_cast<std::size_t>(first) * words;
      if (isa == Isa::Avx2 && count == 4) {
        weights_avx2(job, sp, 4, hist[t].data());
      } else {
        weights_scalar(job, sp, count, hist[t].data());
      }
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> out(hsize, 0);
  for (const auto& h : hist)
    for (std::size_t i = 0; i < hsize; ++i) out[i] += h[i];
  return out;
}

}  // namespace sdcyc::kernels
