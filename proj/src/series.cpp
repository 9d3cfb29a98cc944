#include "piharmonic/series.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"

namespace piharmonic {

WeightExpr WeightExpr::from_rf(const RationalFunction& rf) {
  WeightExpr w;
  w.base = rf;
  return w;
}

WeightExpr WeightExpr::constant(const Rational& c) {
  return from_rf(RationalFunction(c));
}

std::vector<HarmonicKey> WeightExpr::keys() const {
  std::set<HarmonicKey> uniq;
  for (const auto& t : harmonic) uniq.insert(t.key);
  return {uniq.begin(), uniq.end()};
}

std::pair<Rational, Rational> weight_eval(const WeightExpr& w, const HarmonicState& state) {
  Rational k(state.k());
  Rational v = w.base.is_zero() ? Rational(0) : w.base.eval_k(k);
  for (const auto& t : w.harmonic) {
    if (t.coef.is_zero()) continue;
    v = v + t.coef.eval_k(k) * state.value(t.key);
  }
  Rational l = w.log2_part.is_zero() ? Rational(0) : w.log2_part.eval_k(k);
  return {v, l};
}

SeriesTerms::SeriesTerms(const SeriesSpec& spec)
    : spec_(&spec),
      state_(HarmonicState::at(spec.start, spec.weight.keys())),
      base_(spec.t0) {
  recompute();
}

void SeriesTerms::recompute() {
  auto [v, l] = weight_eval(spec_->weight, state_);
  value_ = base_ * v;
  log2_coef_ = base_ * l;
}

void SeriesTerms::advance() {
  base_ = base_ * spec_->ratio.eval_k(Rational(state_.k()));
  state_ = state_.advanced();
  recompute();
}

std::pair<Rational, Rational> term_at(const SeriesSpec& spec, long k) {
  if (k < spec.start) throw DomainError("term index precedes the series start");
  SeriesTerms it(spec);
  while (it.k() < k) it.advance();
  return {it.value(), it.log2_coef()};
}

Rational ratio_limit(const SeriesSpec& spec) {
  const Poly& num = spec.ratio.num();
  const Poly& den = spec.ratio.den();
  if (num.deg_p() > 0 || den.deg_p() > 0)
    throw DomainError("ratio still depends on an unbound parameter");
  if (den.is_zero()) throw DomainError("ratio denominator is zero");
  if (num.is_zero()) return Rational(0);
  int dn = num.deg_k(), dd = den.deg_k();
  if (dn > dd) throw DomainError("term ratio diverges: numerator degree exceeds denominator");
  if (dn < dd) return Rational(0);
  return num.coeff(dn, 0) / den.coeff(dd, 0);
}

namespace {

// Upper bound helper: max(a, b) by value.
const BigReal& bmax(const BigReal& a, const BigReal& b) { return (a < b) ? b : a; }

// Cohen-Villegas-Zagier sum of sum_{j>=0} (-1)^j a_j from the first n entries.
BigReal cvz_estimate(const std::vector<BigReal>& a, long n, long wb) {
  BigReal d = (BigReal::from_long(3, wb) + BigReal::from_long(8, wb).sqrt())
                  .pow_rational(Rational(n));
  d = (d + BigReal::from_long(1, wb) / d) / 2;
  BigReal b = BigReal::from_long(-1, wb);
  BigReal c = -d;
  BigReal s(wb);
  for (long j = 0; j < n; ++j) {
    c = b - c;
    s += c * a[static_cast<size_t>(j)];
    b = b * Rational(2 * (j + n) * (j - n), (2 * j + 1) * (j + 1));
  }
  return s / d;
}

}  // namespace

SumResult sum_direct(const SeriesSpec& spec, const PrecisionContext& ctx) {
  Rational rl = ratio_limit(spec);
  Rational arho = rl.abs();
  if (!(arho < Rational(1)))
    throw ConvergenceError("direct summation needs |term ratio| limit < 1, got " +
                           rl.to_string());
  const Rational rho_hat = (Rational(1) + arho) / Rational(2);
  const Rational tail_factor = rho_hat / (Rational(1) - rho_hat);
  const long wb = ctx.working_bits;
  const BigReal log2v = const_log2_bits(wb);
  const BigReal eps = BigReal::pow2(-(wb - 16), wb);

  BigReal sum(wb), abs_sum(wb), envelope(wb), prev_abs(wb);
  bool have_prev = false;
  int ok_window = 0;
  const long max_terms = 100L * ctx.target_digits + 400;

  SeriesTerms it(spec);
  long count = 0;
  BigReal tail_bound(wb);
  for (;; ++count) {
    if (count > max_terms)
      throw ConvergenceError("series did not meet tolerance within " +
                             std::to_string(max_terms) + " terms");
    BigReal term = BigReal::from_rational(it.value(), wb);
    if (!it.log2_coef().is_zero())
      term += BigReal::from_rational(it.log2_coef(), wb) * log2v;
    sum += term;
    BigReal a = term.abs();
    abs_sum += a;
    envelope = bmax(a, envelope * rho_hat);
    if (!a.is_zero()) {
      if (have_prev) {
        if (a <= prev_abs * rho_hat)
          ++ok_window;
        else
          ok_window = 0;
      }
      prev_abs = a;
      have_prev = true;
    }
    tail_bound = envelope * tail_factor;
    if (count >= 8 && ok_window >= 8 && tail_bound < eps) break;
    it.advance();
  }

  SumResult r{sum, tail_bound + abs_sum * BigReal::pow2(-(wb - 4), wb), count + 1, "direct"};
  return r;
}

SumResult sum_alternating_accelerated(const SeriesSpec& spec, const PrecisionContext& ctx) {
  Rational rl = ratio_limit(spec);
  if (!rl.is_negative())
    throw ConvergenceError("acceleration needs an alternating series; ratio limit " +
                           rl.to_string());
  if (rl.abs() > Rational(1))
    throw ConvergenceError("term ratio limit exceeds 1 in magnitude: " + rl.to_string());
  const long wb = ctx.working_bits;
  const BigReal log2v = const_log2_bits(wb);

  const long n = static_cast<long>(1.31 * (ctx.target_digits + 5)) + 8;
  const long need = n + 8;

  // Head: exact sum of everything before the first run of 16 strictly
  // alternating nonzero terms.
  BigReal head(wb);
  std::vector<BigReal> run;
  run.reserve(static_cast<size_t>(need));
  long run_start = spec.start;
  const long scan_limit = 4096;
  SeriesTerms it(spec);
  while (static_cast<long>(run.size()) < 16) {
    if (it.k() - spec.start > scan_limit)
      throw ConvergenceError("no alternating run found within " +
                             std::to_string(scan_limit) + " terms");
    BigReal term = BigReal::from_rational(it.value(), wb);
    if (!it.log2_coef().is_zero())
      term += BigReal::from_rational(it.log2_coef(), wb) * log2v;
    bool extends = !run.empty() ? term.sign() == -run.back().sign() : term.sign() != 0;
    if (extends) {
      run.push_back(term);
    } else {
      for (const BigReal& t : run) head += t;
      head += term;
      run.clear();
      run_start = it.k() + 1;
    }
    it.advance();
  }
  while (static_cast<long>(run.size()) < need) {
    BigReal term = BigReal::from_rational(it.value(), wb);
    if (!it.log2_coef().is_zero())
      term += BigReal::from_rational(it.log2_coef(), wb) * log2v;
    if (term.sign() != -run.back().sign())
      throw InstabilityError("alternation broke at k=" + std::to_string(it.k()));
    run.push_back(term);
    it.advance();
  }

  const int sigma0 = run.front().sign();
  std::vector<BigReal> mag;
  mag.reserve(run.size());
  for (const BigReal& t : run) mag.push_back(t.abs());

  BigReal est1 = cvz_estimate(mag, n, wb);
  BigReal est2 = cvz_estimate(mag, n + 8, wb);
  if (agree_digits(est1, est2, ctx.target_digits + 20) < ctx.target_digits)
    throw InstabilityError("accelerated estimates at orders " + std::to_string(n) +
                           " and " + std::to_string(n + 8) + " disagree");
  BigReal tail = (sigma0 > 0) ? est2 : -est2;
  SumResult r{head + tail,
              (est1 - est2).abs() + BigReal::pow2(-(wb - 8), wb),
              (run_start - spec.start) + need, "accelerated"};
  return r;
}

SumResult sum_series(const SeriesSpec& spec, const PrecisionContext& ctx) {
  Rational rl = ratio_limit(spec);
  if (rl.abs() < Rational(1)) return sum_direct(spec, ctx);
  if (rl.is_negative()) return sum_alternating_accelerated(spec, ctx);
  throw ConvergenceError("series with ratio limit " + rl.to_string() +
                         " needs the asymptotic tail machinery");
}

}  // namespace piharmonic
