#pragma once

#include "piharmonic/bigreal.hpp"
#include "piharmonic/rational.hpp"

namespace piharmonic {

// Fundamental constants at the context's working precision.  Each value is
// computed once per precision and cached; repeated calls are cheap copies.
BigReal const_pi(const PrecisionContext& ctx);
BigReal const_log2(const PrecisionContext& ctx);
BigReal const_euler_gamma(const PrecisionContext& ctx);

// Same values at an explicit binary precision, for internal consumers that
// work with guard bits beyond a context's working precision.
BigReal const_pi_bits(long bits);
BigReal const_log2_bits(long bits);
BigReal const_euler_gamma_bits(long bits);

// cos(pi * r) for exact rational r.  Reduces r mod 2 and folds into [0, 1/2]
// exactly, so integer and half-integer arguments give exact +-1 / 0, and
// r in {1/3, 2/3, ...} gives exact +-1/2.
BigReal cos_pi(const Rational& r, const PrecisionContext& ctx);

// Independent slow routes used to cross-validate the primary constants.
// machin_pi: 16*atan(1/5) - 4*atan(1/239) with atan(1/q) summed termwise.
// atanh_log2: 2*atanh(1/3) summed termwise.
BigReal machin_pi(const PrecisionContext& ctx);
BigReal atanh_log2(const PrecisionContext& ctx);

}  // namespace piharmonic
