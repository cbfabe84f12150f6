#pragma once
// Exact integer/rational arithmetic, backed by GMP.

#include <gmpxx.h>

#include <string>

namespace knotscope {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace knotscope
