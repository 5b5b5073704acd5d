#pragma once

#include <string>
#include <vector>

#include "sdcyc/instance.hpp"

namespace sdcyc {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  // Cap on codes pushed through the oracle per check.
  std::size_t max_codes = 2000;
  // Ambient F_2 dimension up to which the full ideal census runs.
  unsigned census_bits = 16;
};

// Oracle suite for one instance: factorization, idempotents, mass formula,
// self-duality of every enumerated code, closed lists, and (k = 2) duals and hulls.
std::vector<CheckResult> verify_instance(const Instance& inst, const VerifyOptions& opt = {});

}  // namespace sdcyc
