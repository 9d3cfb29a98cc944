#pragma once

#include <string>
#include <utility>
#include <vector>

#include "piharmonic/bigreal.hpp"
#include "piharmonic/harmonic.hpp"
#include "piharmonic/ratfunc.hpp"
#include "piharmonic/rational.hpp"

namespace piharmonic {

// One harmonic contribution to a weight: coef(k) * H^{(key.order)}_{key.mult*k}(key.shift).
struct WeightTerm {
  HarmonicKey key;
  RationalFunction coef;
};

// weight(k) = base(k) + sum_i coef_i(k) H_i(k) + log2_part(k) * log 2.
// The explicit log 2 channel keeps weights like (42k+5)(H_{2k}-H_k-2 log 2)+7
// exact: a term evaluates to the pair (rational part, log 2 coefficient).
struct WeightExpr {
  RationalFunction base;
  std::vector<WeightTerm> harmonic;
  RationalFunction log2_part;

  static WeightExpr from_rf(const RationalFunction& rf);
  static WeightExpr constant(const Rational& c);

  std::vector<HarmonicKey> keys() const;
  bool has_log2() const { return !log2_part.is_zero(); }
};

// Exact weight value at state.k(): {rational part, log 2 coefficient}.
std::pair<Rational, Rational> weight_eval(const WeightExpr& w, const HarmonicState& state);

// A series sum_{k>=start} base(k) * weight(k) where the weight-free factor
// base(k) satisfies base(start) = t0 and base(k+1) = base(k) * ratio(k).
// ratio is an exact rational function of k alone (parameters substituted).
struct SeriesSpec {
  long start = 0;
  Rational t0;
  RationalFunction ratio;
  WeightExpr weight;
};

// Exact term stream: value() + log2_coef() * log 2 is the term at index k().
class SeriesTerms {
 public:
  explicit SeriesTerms(const SeriesSpec& spec);
  long k() const { return state_.k(); }
  const Rational& value() const { return value_; }
  const Rational& log2_coef() const { return log2_coef_; }
  const Rational& base() const { return base_; }
  void advance();

 private:
  void recompute();
  const SeriesSpec* spec_;
  HarmonicState state_;
  Rational base_;
  Rational value_;
  Rational log2_coef_;
};

// Exact term at one index (O(k) work): {rational part, log 2 coefficient}.
std::pair<Rational, Rational> term_at(const SeriesSpec& spec, long k);

// Signed limit of ratio(k) as k -> infinity. Zero when the numerator degree is
// lower; DomainError when the ratio diverges (numerator degree higher).
Rational ratio_limit(const SeriesSpec& spec);

struct SumResult {
  BigReal value;
  BigReal error_bound;
  long terms = 0;
  std::string method;
};

// Direct summation for |ratio limit| < 1. Stops once the geometric tail
// envelope drops below the working tolerance and the last eight observed
// term ratios sit under the envelope rate; ConvergenceError past 100*digits
// terms or when the ratios never settle.
SumResult sum_direct(const SeriesSpec& spec, const PrecisionContext& ctx);

// Cohen-Villegas-Zagier acceleration for alternating series, including the
// slowly convergent |ratio limit| = 1 case. Terms before the first run of 16
// strictly alternating nonzero terms are summed exactly as a head. The
// estimate is recomputed at a higher acceleration order; disagreement raises
// InstabilityError.
SumResult sum_alternating_accelerated(const SeriesSpec& spec, const PrecisionContext& ctx);

// Dispatch: direct when |ratio limit| < 1, accelerated for alternating
// borderline series.
SumResult sum_series(const SeriesSpec& spec, const PrecisionContext& ctx);

}  // namespace piharmonic
