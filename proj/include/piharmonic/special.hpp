#pragma once

#include "piharmonic/bigreal.hpp"
#include "piharmonic/rational.hpp"

namespace piharmonic {

// Gamma-family evaluations at exact rational arguments x > 0, computed by
// shifting x upward until Stirling's asymptotic series reaches the working
// precision and then undoing the shift through the recurrence, with the
// downward corrections accumulated exactly.  Non-positive integers raise
// PoleError; other non-positive arguments raise DomainError.
BigReal gamma_ln(const Rational& x, const PrecisionContext& ctx);
BigReal gamma_value(const Rational& x, const PrecisionContext& ctx);
BigReal digamma(const Rational& x, const PrecisionContext& ctx);
BigReal trigamma(const Rational& x, const PrecisionContext& ctx);

// Gamma(n + 1/2) = gamma_half_coef(n) * sqrt(pi), exact for every integer n:
// (2m)!/(4^m m!) for n = m >= 0 and (-4)^m m!/(2m)! for n = -m < 0.
Rational gamma_half_coef(long n);

}  // namespace piharmonic
