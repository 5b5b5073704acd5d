#pragma once

#include <cstdint>
#include <functional>

#include "sdcyc/ideals.hpp"
#include "sdcyc/selfdual.hpp"

namespace sdcyc {

// The seven ideal kinds of K_j[u]/<u^2>, f = f_j.
//   Zero <0>, One <1>, U <u>, F <f>, UF <uf>, UPlusF <u + f w>, UAndF <u, f>
enum class K2Kind { Zero, One, U, F, UF, UPlusF, UAndF };

const char* k2_kind_name(K2Kind kind);
K2Kind k2_kind(const IdealLabel& label);
// w is used by UPlusF only.
IdealLabel k2_label(int j, K2Kind kind, std::uint64_t w = 0);
// dim over F_{2^m} divided by d_j: 0, 4, 2, 2, 1, 2, 3
int k2_kappa(K2Kind kind);

// Meet in the k = 2 ideal lattice <0> < <uf> < {<f>, <u + f w>} < <u, f> < <1>.
IdealLabel k2_meet(const IdealLabel& a, const IdealLabel& b);
bool k2_contains(const IdealLabel& big, const IdealLabel& small);

// Dual of a single component ideal, placed at rho(j).
IdealLabel dual_component(const IdealLabel& label, const Instance& inst);
CyclicCode dual_code(const CyclicCode& code, const Instance& inst);
// Hull by the per-component case analysis.
CyclicCode hull(const CyclicCode& code, const Instance& inst);
// Hull as the lattice meet of C_j and D_j; cross-check for hull().
CyclicCode hull_by_meet(const CyclicCode& code, const Instance& inst);
// dim over F_{2^m}
Count code_dimension(const CyclicCode& code, const Instance& inst);
Count hull_dimension(const CyclicCode& code, const Instance& inst);
bool is_self_orthogonal(const CyclicCode& code, const Instance& inst);

class SelfOrthogonalEnumerator {
 public:
  explicit SelfOrthogonalEnumerator(const Instance& inst);

  const Count& size() const { return prod_.size(); }
  CyclicCode at(const Count& index) const { return prod_.at(*inst_, index); }
  void for_each(const std::function<bool(const CyclicCode&)>& fn) const { prod_.for_range(*inst_, 0, size(), fn); }

 private:
  const Instance* inst_;
  SlotProduct prod_;
};

std::vector<CyclicCode> enumerate_selforthogonal(const Instance& inst);
// k = 2 mass formula; needs only the factorization.
Count count_selforthogonal(const FactorData& fd);

}  // namespace sdcyc
