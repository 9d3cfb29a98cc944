#pragma once

#include <string>
#include <utility>
#include <vector>

#include "piharmonic/bigreal.hpp"
#include "piharmonic/ratfunc.hpp"
#include "piharmonic/rational.hpp"

namespace piharmonic {

// Hurwitz zeta sum_{m>=0} (q+m)^{-s} for rational s > 1 and integer q >= 1,
// by the Euler-Maclaurin expansion at the (already large) offset q.
BigReal hurwitz_zeta(const Rational& s, long q, const PrecisionContext& ctx);

// A slowly convergent balanced series sum_{k>=start} poly(k) prod_i (a_i)_k^{e_i}
// with sum_i e_i = 0 (all index multiples 1). Terms behave like k^{-s} with
// s = -(deg poly + sum_i e_i a_i); s > 1 is required for convergence.
struct SlowSeries {
  RationalFunction poly;
  std::vector<std::pair<Rational, int>> pochs;  // (alpha > 0, signed exponent)
  long start = 0;
};

// Exact decay exponent s: the term is ~ C k^{-s} as k -> infinity.
Rational slow_decay_exponent(const SlowSeries& s);

struct SlowSumResult {
  BigReal value;
  long head_terms = 0;
  std::string method;  // "asymptotic"
};

// Exact rational head for k < K plus a tail evaluated from the Stirling
// expansion of the Gamma-quotient (Bernoulli-polynomial coefficients, exact)
// combined with Hurwitz zeta values. Validated by recomputation at a larger
// split point; disagreement raises InstabilityError, s <= 1 raises
// ConvergenceError.
SlowSumResult sum_slow(const SlowSeries& s, const PrecisionContext& ctx);

}  // namespace piharmonic
