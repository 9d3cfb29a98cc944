#include "piharmonic/wz.hpp"

#include <map>

#include "piharmonic/catalog.hpp"
#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"
#include "piharmonic/special.hpp"

namespace piharmonic {

namespace {

using R = Rational;

const R& coef_cached(long m) {
  thread_local std::map<long, R> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, gamma_half_coef(m)).first;
  return it->second;
}

const R& fact_inv_sq_cached(long n) {
  // 1 / ((2n)!)^2
  thread_local std::map<long, R> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    mpz_class f = factorial(static_cast<unsigned long>(2 * n));
    mpz_class f2 = f * f;
    it = cache.emplace(n, R(mpz_class(1), f2)).first;
  }
  return it->second;
}

// (-1)^{n+k} coef(2n-k) coef(n)^3 coef(k)^2 / ((n+k)! ((2n)!)^2)
R wz_core(long n, long k) {
  R v = coef_cached(2 * n - k) * coef_cached(n).pow_int(3) * coef_cached(k).pow_int(2);
  mpz_class fnk = factorial(static_cast<unsigned long>(n + k));
  v = v / R(fnk) * fact_inv_sq_cached(n);
  if ((n + k) % 2 != 0) v = -v;
  return v;
}

R row_poly(long n, long k, bool perturb_row) {
  return R((perturb_row ? 21 : 20) * n + 2 * k + 3);
}

R wz_G_impl(long n, long k, bool perturb_row) {
  return wz_core(n, k) * row_poly(n, k, perturb_row);
}

// Exact ratio G(n+1,k)/G(n,k) as a rational function of n, k substituted.
RationalFunction row_ratio(const R& k) {
  auto lin = [](const R& c0, const R& cn) { return Poly::linear(c0, cn, R(0)); };
  Poly half = lin(R(1, 2), R(1));
  Poly num = lin(R(2) * k + R(23), R(20)) * lin(R(1, 2) - k, R(2)) *
             lin(R(3, 2) - k, R(2)) * half * half * half;
  Poly den = lin(R(2) * k + R(3), R(20)) * lin(k + R(1), R(1)) * lin(R(1), R(2)) *
             lin(R(1), R(2)) * lin(R(2), R(2)) * lin(R(2), R(2));
  return RationalFunction(-num, den);
}

}  // namespace

Rational wz_G(long n, long k) { return wz_G_impl(n, k, false); }

Rational wz_F(long n, long k) {
  if (n == 0) return R(0);
  return wz_core(n, k) * R(64 * n * n, 4 * n - 2 * k - 1);
}

Rational wz_H(long n, long k) { return wz_F(n + 1, n + k) + wz_G(n, n + k); }

BigReal wz_G_real(long n, const Rational& k, const PrecisionContext& ctx) {
  if (!(k > R(-1, 2) && k < R(1, 2)))
    throw DomainError("gamma continuation of G needs -1/2 < k < 1/2, got " +
                      k.to_string());
  const long wb = ctx.working_bits;
  BigReal v = BigReal::from_rational(R(20 * n + 3) + R(2) * k, wb) * cos_pi(k, ctx);
  v = v * gamma_value(R(2 * n) + R(1, 2) - k, ctx);
  BigReal gh = gamma_value(R(n) + R(1, 2), ctx);
  v = v * gh * gh * gh;
  BigReal gk = gamma_value(k + R(1, 2), ctx);
  v = v * gk * gk;
  BigReal pi = const_pi(ctx);
  v = v / (pi * pi * pi);
  v = v / gamma_value(k + R(n + 1), ctx);
  v = v * fact_inv_sq_cached(n);
  if (n % 2 != 0) v = -v;
  return v;
}

PairSweepReport wz_pair_sweep(long n_max, long k_max, bool perturb_row) {
  PairSweepReport r;
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= k_max; ++k) {
      R lhs = wz_F(n + 1, k) - wz_F(n, k);
      R rhs = wz_G_impl(n, k + 1, perturb_row) - wz_G_impl(n, k, perturb_row);
      ++r.checked;
      if (lhs != rhs) {
        r.detail = "pair relation fails at n=" + std::to_string(n) +
                   ", k=" + std::to_string(k);
        return r;
      }
    }
  }
  r.pass = true;
  return r;
}

SumResult wz_sum_G(const Rational& k, const PrecisionContext& ctx) {
  SeriesSpec spec;
  spec.start = 0;
  spec.ratio = row_ratio(k);
  spec.weight = WeightExpr::constant(R(1));
  if (k.is_integer()) {
    long kl = k.to_long();
    if (kl < 0) throw DomainError("row sum needs k >= 0 at integer k");
    spec.t0 = wz_G(0, kl);
    return sum_series(spec, ctx);
  }
  spec.t0 = R(1);
  SumResult r = sum_series(spec, ctx);
  BigReal g0 = wz_G_real(0, k, ctx);
  r.value = r.value * g0;
  r.error_bound = r.error_bound * g0.abs();
  return r;
}

SumResult wz_sum_H(long k, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("diagonal sum needs k >= 0");
  const long wb = ctx.working_bits;
  const BigReal tol = BigReal::pow2(16 - wb, wb);
  const BigReal one = BigReal::from_long(1, wb);
  // observed term ratios stay below 1/60; 1/8 is a safe envelope rate
  const BigReal rho_hat = BigReal::from_rational(R(1, 8), wb);
  const BigReal tail_factor = rho_hat / (one - rho_hat);
  BigReal s(wb), env(wb);
  long terms = 0;
  const long max_terms = 100L * ctx.target_digits + 400;
  for (long n = 0;; ++n) {
    BigReal tb = BigReal::from_rational(wz_H(n, k), wb);
    s += tb;
    ++terms;
    BigReal decayed = env * rho_hat;
    BigReal a = tb.abs();
    env = (a > decayed) ? a : decayed;
    if (terms >= 8) {
      BigReal tail = env * tail_factor;
      if (tail < tol) return {s, tail, terms, "direct"};
    }
    if (terms > max_terms) throw ConvergenceError("diagonal sum failed to settle");
  }
}

DdkReport wz_ddk_check() {
  PrecisionContext ctx(60);
  const R h = R(1, 10).pow_int(10);
  BigReal sp = wz_sum_G(h, ctx).value;
  BigReal sm = wz_sum_G(-h, ctx).value;
  BigReal d = (sp - sm) / BigReal::from_rational(h * R(2), ctx.working_bits);
  DdkReport r;
  r.value = d.to_decimal(20);
  r.zero_digits = agree_digits(d, BigReal(ctx.working_bits), 40);
  r.pass = r.zero_digits >= 15;
  return r;
}

bool wz_bridge_check(long n_max) {
  SeriesTerms t(catalog_record("ra3").series);
  for (long n = 0; n <= n_max; ++n) {
    if (wz_G(n, 0) != t.value()) return false;
    t.advance();
  }
  return true;
}

std::vector<ZeroSeriesReport> wz_zero_series(int digits, long term_limit) {
  std::vector<ZeroSeriesReport> out;
  PrecisionContext ctx(digits);
  const BigReal zero(ctx.working_bits);

  auto run = [&](const char* id, const char* harmonic_id, const char* plain_id,
                 const R& log2_scale) {
    ZeroSeriesReport r;
    r.id = id;
    const SeriesSpec& hs = catalog_record(harmonic_id).series;
    const SeriesSpec& ps = catalog_record(plain_id).series;
    SeriesSpec combined = hs;
    combined.weight.log2_part = ps.weight.base * log2_scale;
    SeriesTerms tc(combined), th(hs), tp(ps);
    r.term_level_pass = true;
    for (long k = 0; k <= term_limit; ++k) {
      if (tc.value() != th.value() || tc.log2_coef() != log2_scale * tp.value()) {
        r.term_level_pass = false;
        break;
      }
      tc.advance(), th.advance(), tp.advance();
      r.terms_checked = k + 1;
    }
    BigReal s = sum_series(combined, ctx).value;
    r.zero_digits = agree_digits(s, zero, digits + 10);
    r.pass = r.term_level_pass && r.zero_digits >= digits;
    out.push_back(r);
  };

  run("telescoped-(20k+3)", "thm-(H1)", "ra3", R(2));
  run("telescoped-(42k+5)", "thm-(4)", "ra4", R(-2));
  return out;
}

}  // namespace piharmonic
