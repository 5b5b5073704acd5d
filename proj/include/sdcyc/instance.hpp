#pragma once

#include <cstdint>

#include "sdcyc/cyclotomic.hpp"
#include "sdcyc/quotient.hpp"

namespace sdcyc {

// Everything derived from (n, m, modulus, k): factorization, idempotents, residue fields.
struct Instance {
  int n;
  int k;
  FieldCtx field;
  FactorData fd;
  Idempotents idem;
  Components comps;

  Instance(int n_, const FieldCtx& field_, int k_)
      : n(n_), k(k_), field(field_), fd(factor_xn_minus_1(n_, field_)), idem(compute_idempotents(fd)), comps(fd) {
    if (k < 1) fail(ErrorKind::OutOfRange, "nilpotency index k must be >= 1");
  }

  unsigned m() const { return field.m(); }
  int r() const { return fd.r(); }
  // log2 |F_j|
  unsigned bits(int j) const { return field.m() * static_cast<unsigned>(fd.degree(j)); }
};

}  // namespace sdcyc
