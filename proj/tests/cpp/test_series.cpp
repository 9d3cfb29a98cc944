#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "piharmonic/closedform.hpp"
#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"
#include "piharmonic/series.hpp"

using namespace piharmonic;

namespace {

RationalFunction rf_linear(long a, long b) {
  // a*k + b
  return RationalFunction(Poly::linear(Rational(b), Rational(a), Rational(0)));
}

RationalFunction rf_const(long c) { return RationalFunction(Rational(c)); }

// ratio of 4^{-k} (1/2)_k^3 / (1)_k^3: (2k+1)^3 / (32 (k+1)^3).
RationalFunction ratio_quarter_half3() {
  Poly t = Poly::linear(Rational(1), Rational(2), Rational(0));  // 2k+1
  Poly b = Poly::linear(Rational(1), Rational(1), Rational(0));  // k+1
  return RationalFunction(t * t * t, (b * b * b) * Rational(32));
}

// ratio of 64^{-k} (1/2)_k^3 / (1)_k^3: (2k+1)^3 / (512 (k+1)^3).
RationalFunction ratio_r64_half3() {
  Poly t = Poly::linear(Rational(1), Rational(2), Rational(0));
  Poly b = Poly::linear(Rational(1), Rational(1), Rational(0));
  return RationalFunction(t * t * t, (b * b * b) * Rational(512));
}

}  // namespace

TEST_CASE("exact term stream reproduces hand-computed partial sums") {
  SeriesSpec spec;
  spec.t0 = Rational(1);
  spec.ratio = ratio_quarter_half3();
  spec.weight = WeightExpr::from_rf(rf_linear(6, 1));

  auto t0 = term_at(spec, 0);
  auto t1 = term_at(spec, 1);
  auto t2 = term_at(spec, 2);
  CHECK(t0.first == Rational(1));
  CHECK(t1.first == Rational(7, 32));
  CHECK(t2.first == Rational(351, 8192));
  CHECK(t0.second.is_zero());

  // Independent closed form of the k = 5 term.
  auto t5 = term_at(spec, 5);
  Rational base5 = pochhammer(Rational(1, 2), 5).pow_int(3) /
                   (pochhammer(Rational(1), 5).pow_int(3) * Rational(1024));
  CHECK(t5.first == base5 * Rational(31));
}

TEST_CASE("iterator matches term_at across a stretch") {
  SeriesSpec spec;
  spec.t0 = Rational(1);
  spec.ratio = ratio_quarter_half3();
  WeightExpr w;
  w.base = rf_const(-2);
  w.harmonic.push_back({HarmonicKey{1, 1, Rational(0)}, rf_linear(6, 1)});
  spec.weight = w;

  SeriesTerms it(spec);
  for (long k = 0; k < 12; ++k) {
    auto [v, l] = term_at(spec, k);
    CHECK(it.k() == k);
    CHECK(it.value() == v);
    CHECK(it.log2_coef() == l);
    it.advance();
  }
}

TEST_CASE("ratio limit classification") {
  SeriesSpec geo;
  geo.t0 = Rational(1);
  geo.ratio = ratio_quarter_half3();
  geo.weight = WeightExpr::constant(Rational(1));
  CHECK(ratio_limit(geo) == Rational(1, 4));

  SeriesSpec alt;
  alt.t0 = Rational(1);
  alt.ratio = RationalFunction(Poly::linear(Rational(-1), Rational(-1), Rational(0)),
                               Poly::linear(Rational(2), Rational(1), Rational(0)));
  alt.weight = WeightExpr::constant(Rational(1));
  CHECK(ratio_limit(alt) == Rational(-1));
}

TEST_CASE("direct summation: central binomial series to 50 digits") {
  // sum 4^{-k} (1/2)_k^3/(1)_k^3 (6k+1) = 4/pi.
  SeriesSpec spec;
  spec.t0 = Rational(1);
  spec.ratio = ratio_quarter_half3();
  spec.weight = WeightExpr::from_rf(rf_linear(6, 1));

  PrecisionContext ctx(50);
  SumResult r = sum_direct(spec, ctx);
  BigReal expect = BigReal::from_long(4, ctx.working_bits) / const_pi(ctx);
  CHECK(agree_digits(r.value, expect, 60) >= 50);
  CHECK(r.method == "direct");
  CHECK(r.terms < 500);
}

TEST_CASE("direct summation handles the log 2 channel exactly") {
  // sum 64^{-k} (1/2)_k^3/(1)_k^3 {(42k+5)(H_{2k}-H_k-2log2)+7} = 0.
  SeriesSpec spec;
  spec.t0 = Rational(1);
  spec.ratio = ratio_r64_half3();
  WeightExpr w;
  w.base = rf_const(7);
  w.harmonic.push_back({HarmonicKey{1, 2, Rational(0)}, rf_linear(42, 5)});
  w.harmonic.push_back({HarmonicKey{1, 1, Rational(0)}, -rf_linear(42, 5)});
  w.log2_part = rf_linear(-84, -10);
  spec.weight = w;

  PrecisionContext ctx(40);
  SumResult r = sum_direct(spec, ctx);
  CHECK(r.value.abs() < BigReal::pow2(-130, ctx.working_bits));
}

TEST_CASE("acceleration: two classic alternating sums") {
  PrecisionContext ctx(40);

  SeriesSpec log_spec;  // sum (-1)^k/(k+1) = log 2
  log_spec.t0 = Rational(1);
  log_spec.ratio = RationalFunction(Poly::linear(Rational(-1), Rational(-1), Rational(0)),
                                    Poly::linear(Rational(2), Rational(1), Rational(0)));
  log_spec.weight = WeightExpr::constant(Rational(1));
  SumResult rl = sum_alternating_accelerated(log_spec, ctx);
  CHECK(agree_digits(rl.value, const_log2(ctx), 50) >= 40);
  CHECK(rl.method == "accelerated");

  SeriesSpec pi_spec;  // sum (-1)^k/(2k+1) = pi/4
  pi_spec.t0 = Rational(1);
  pi_spec.ratio = RationalFunction(Poly::linear(Rational(-1), Rational(-2), Rational(0)),
                                   Poly::linear(Rational(3), Rational(2), Rational(0)));
  pi_spec.weight = WeightExpr::constant(Rational(1));
  SumResult rp = sum_alternating_accelerated(pi_spec, ctx);
  BigReal expect = const_pi(ctx) / BigReal::from_long(4, ctx.working_bits);
  CHECK(agree_digits(rp.value, expect, 50) >= 40);
}

TEST_CASE("acceleration survives a nonalternating head") {
  // sum (-1)^k/(k+1) with the k = 0 term replaced by weight 0 and folded back:
  // weight k/(k+1) zeroes the first term; the remainder still alternates.
  SeriesSpec spec;
  spec.t0 = Rational(1);
  spec.ratio = RationalFunction(Poly::linear(Rational(-1), Rational(-1), Rational(0)),
                                Poly::linear(Rational(2), Rational(1), Rational(0)));
  spec.weight = WeightExpr::from_rf(RationalFunction(
      Poly::linear(Rational(0), Rational(1), Rational(0)),
      Poly::linear(Rational(1), Rational(1), Rational(0))));
  PrecisionContext ctx(30);
  SumResult r = sum_alternating_accelerated(spec, ctx);
  // sum_{k>=1} (-1)^k k/(k+1)^2 ... check against direct high-term evaluation
  // of the same spec through the exact stream at higher order instead of a
  // closed form: recompute at 45 digits and compare.
  PrecisionContext hi(45);
  SumResult r2 = sum_alternating_accelerated(spec, hi);
  CHECK(agree_digits(r.value, r2.value, 40) >= 29);
}

TEST_CASE("refinement consistency: alternating quarter-base series") {
  // sum (1/2)_k(1/4)_k(3/4)_k / ((-4)^k (1)_k^3) (20k+3) = 8/pi, summed
  // directly (|rho| = 1/4) at two precisions.
  Poly k1 = Poly::linear(Rational(1, 2), Rational(1), Rational(0));
  Poly k2 = Poly::linear(Rational(1, 4), Rational(1), Rational(0));
  Poly k3 = Poly::linear(Rational(3, 4), Rational(1), Rational(0));
  Poly kb = Poly::linear(Rational(1), Rational(1), Rational(0));
  SeriesSpec spec;
  spec.t0 = Rational(1);
  spec.ratio = RationalFunction((k1 * k2 * k3) * Rational(-1, 4), kb * kb * kb);
  spec.weight = WeightExpr::from_rf(rf_linear(20, 3));

  PrecisionContext lo(30), hi(60);
  SumResult a = sum_direct(spec, lo);
  SumResult b = sum_direct(spec, hi);
  CHECK(agree_digits(a.value, b.value, 40) >= 30);
  BigReal expect = BigReal::from_long(8, hi.working_bits) / const_pi(hi);
  CHECK(agree_digits(b.value, expect, 70) >= 60);
}

TEST_CASE("dispatch picks direct for geometric and acceleration for slow") {
  SeriesSpec geo;
  geo.t0 = Rational(1);
  geo.ratio = ratio_quarter_half3();
  geo.weight = WeightExpr::from_rf(rf_linear(6, 1));
  PrecisionContext ctx(25);
  CHECK(sum_series(geo, ctx).method == "direct");

  SeriesSpec alt;
  alt.t0 = Rational(1);
  alt.ratio = RationalFunction(Poly::linear(Rational(-1), Rational(-1), Rational(0)),
                               Poly::linear(Rational(2), Rational(1), Rational(0)));
  alt.weight = WeightExpr::constant(Rational(1));
  CHECK(sum_series(alt, ctx).method == "accelerated");

  SeriesSpec slow_pos;  // sum 1/(k+1)^2-like ratio -> +1: not summable here
  slow_pos.t0 = Rational(1);
  slow_pos.ratio = RationalFunction(Poly::linear(Rational(1), Rational(1), Rational(0)),
                                    Poly::linear(Rational(3), Rational(1), Rational(0)));
  slow_pos.weight = WeightExpr::constant(Rational(1));
  CHECK_THROWS_AS(sum_series(slow_pos, ctx), ConvergenceError);
}

TEST_CASE("closed forms evaluate against independent routes") {
  PrecisionContext ctx(60);
  long wb = ctx.working_bits;

  ClosedForm eight_over_pi = ClosedForm::integer(8) / ClosedForm::pi();
  BigReal expect = BigReal::from_long(8, wb) / const_pi(ctx);
  CHECK(agree_digits(eight_over_pi.eval(ctx), expect, 70) >= 60);

  // Gamma(1/4) Gamma(3/4) = pi sqrt(2) via the reflection value.
  ClosedForm prod = ClosedForm::gamma(Rational(1, 4)) * ClosedForm::gamma(Rational(3, 4));
  BigReal expect2 = const_pi(ctx) * BigReal::from_long(2, wb).sqrt();
  CHECK(agree_digits(prod.eval(ctx), expect2, 70) >= 60);

  // psi(3/4) - psi(1/4) = pi.
  ClosedForm dpsi = ClosedForm::digamma(Rational(3, 4)) - ClosedForm::digamma(Rational(1, 4));
  CHECK(agree_digits(dpsi.eval(ctx), const_pi(ctx), 70) >= 60);

  ClosedForm mix = (ClosedForm::integer(8) - ClosedForm::integer(32) / ClosedForm::pi() -
                    (ClosedForm::integer(16) * ClosedForm::log2()) / ClosedForm::pi());
  BigReal byhand = BigReal::from_long(8, wb) -
                   BigReal::from_long(32, wb) / const_pi(ctx) -
                   BigReal::from_long(16, wb) * const_log2(ctx) / const_pi(ctx);
  CHECK(agree_digits(mix.eval(ctx), byhand, 70) >= 60);

  CHECK_THROWS_AS(ClosedForm::gamma(Rational(-1, 2)), DomainError);
}
