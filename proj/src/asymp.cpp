#include "piharmonic/asymp.hpp"

#include <algorithm>
#include <cmath>

#include "piharmonic/errors.hpp"
#include "piharmonic/special.hpp"

namespace piharmonic {

namespace {

// Truncated product of two power series in x (index = power of x).
std::vector<Rational> ps_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                             size_t terms) {
  std::vector<Rational> c(terms, Rational(0));
  for (size_t i = 0; i < a.size() && i < terms; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && i + j < terms; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] = c[i + j] + a[i] * b[j];
    }
  }
  return c;
}

// exp of a power series with zero constant term: E' = f' E.
std::vector<Rational> ps_exp(const std::vector<Rational>& f, size_t terms) {
  std::vector<Rational> e(terms, Rational(0));
  e[0] = Rational(1);
  for (size_t j = 1; j < terms; ++j) {
    Rational acc(0);
    for (size_t n = 1; n <= j && n < f.size(); ++n)
      if (!f[n].is_zero()) acc = acc + Rational(static_cast<long>(n)) * f[n] * e[j - n];
    e[j] = acc / Rational(static_cast<long>(j));
  }
  return e;
}

// Reciprocal of a power series with nonzero constant term.
std::vector<Rational> ps_inv(const std::vector<Rational>& d, size_t terms) {
  std::vector<Rational> r(terms, Rational(0));
  r[0] = d[0].inverse();
  for (size_t j = 1; j < terms; ++j) {
    Rational acc(0);
    for (size_t n = 1; n <= j; ++n) {
      Rational dn = (n < d.size()) ? d[n] : Rational(0);
      if (!dn.is_zero()) acc = acc + dn * r[j - n];
    }
    r[j] = -(r[0] * acc);
  }
  return r;
}

BigReal pow_neg(const BigReal& base, const Rational& e) { return base.pow_rational(e); }

}  // namespace

BigReal hurwitz_zeta(const Rational& s, long q, const PrecisionContext& ctx) {
  if (!(s > Rational(1))) throw DomainError("Hurwitz zeta needs s > 1, got " + s.to_string());
  if (q < 1) throw DomainError("Hurwitz zeta offset must be >= 1");
  const long wb = ctx.working_bits;
  // Euler-Maclaurin at offset Q; its terms bottom out near exp(-2 pi Q), so
  // push the offset high enough for the working precision first.
  const long qmin = static_cast<long>(0.14 * static_cast<double>(wb)) + 12;
  const long Q = std::max(q, qmin);
  BigReal head(wb);
  for (long m = q; m < Q; ++m)
    head += pow_neg(BigReal::from_long(m, wb), -s);

  BigReal qb = BigReal::from_long(Q, wb);
  BigReal integral = pow_neg(qb, Rational(1) - s) / BigReal::from_rational(s - Rational(1), wb);
  BigReal half = pow_neg(qb, -s) / 2;
  BigReal sum = integral + half;

  const BigReal eps = BigReal::pow2(-(wb + 8), wb);
  const BigReal q2inv = BigReal::from_long(1, wb) / (qb * qb);
  BigReal qpow = pow_neg(qb, -s - Rational(1));  // Q^{-s-2r+1} at r = 1
  BigReal prev_abs(wb);
  bool have_prev = false;
  for (unsigned long r = 1;; ++r) {
    Rational coef = bernoulli(2 * r) * pochhammer(s, 2 * r - 1) /
                    Rational(factorial(2 * r));
    BigReal term = qpow * coef;
    BigReal a = term.abs();
    if (a < eps) break;
    if (have_prev && a > prev_abs)
      throw InstabilityError("Hurwitz zeta expansion started to diverge at order " +
                             std::to_string(2 * r));
    sum += term;
    prev_abs = a;
    have_prev = true;
    qpow = qpow * q2inv;
    if (r > static_cast<unsigned long>(wb))
      throw ConvergenceError("Hurwitz zeta expansion did not reach tolerance");
  }
  return head + sum;
}

Rational slow_decay_exponent(const SlowSeries& s) {
  int sum_e = 0;
  Rational a_dot_e(0);
  for (const auto& [alpha, e] : s.pochs) {
    sum_e += e;
    a_dot_e = a_dot_e + alpha * Rational(e);
  }
  if (sum_e != 0) throw DomainError("Gamma-quotient series is not balanced: exponents sum to " +
                                    std::to_string(sum_e));
  int p_deg = s.poly.num().deg_k() - s.poly.den().deg_k();
  return -(a_dot_e + Rational(p_deg));
}

namespace {

// One split evaluation: exact head below K, Stirling + Hurwitz tail from K.
BigReal sum_slow_at_split(const SlowSeries& s, const PrecisionContext& ctx, long K) {
  const long wb = ctx.working_bits;
  const Rational s0 = slow_decay_exponent(s);

  // Exact head.
  BigReal head(wb);
  Rational b(1);
  for (const auto& [alpha, e] : s.pochs)
    b = b * pochhammer(alpha, static_cast<unsigned long>(s.start)).pow_int(e);
  for (long k = s.start; k < K; ++k) {
    Rational term = s.poly.eval_k(Rational(k)) * b;
    head += BigReal::from_rational(term, wb);
    Rational step(1);
    for (const auto& [alpha, e] : s.pochs) step = step * (alpha + Rational(k)).pow_int(e);
    b = b * step;
  }

  // Stirling expansion of prod Gamma(k+a_i)^{e_i} = k^A exp(sum_n c_n k^{-n}).
  const size_t J = static_cast<size_t>(0.5 * static_cast<double>(wb)) + 96;
  std::vector<Rational> f(J, Rational(0));
  for (size_t n = 1; n < J; ++n) {
    Rational cn(0);
    for (const auto& [alpha, e] : s.pochs) {
      Rational bp = bernoulli_poly(n + 1, alpha);
      if (!bp.is_zero()) cn = cn + Rational(e) * bp;
    }
    if (!cn.is_zero()) {
      Rational denom = Rational(static_cast<long>(n)) * Rational(static_cast<long>(n + 1));
      cn = cn / denom;
      if (n % 2 == 0) cn = -cn;  // (-1)^{n+1}
    }
    f[n] = cn;
  }
  std::vector<Rational> expf = ps_exp(f, J);

  // Laurent expansion of poly at infinity.
  std::vector<Rational> numc = s.poly.num().coeffs_desc_k();
  std::vector<Rational> denc = s.poly.den().coeffs_desc_k();
  std::vector<Rational> polyc = ps_mul(numc, ps_inv(denc, J), J);

  std::vector<Rational> w = ps_mul(polyc, expf, J);

  // D = prod Gamma(a_i)^{-e_i} restores (a)_k from Gamma(k+a).
  BigReal dconst = BigReal::from_long(1, wb);
  for (const auto& [alpha, e] : s.pochs)
    dconst = dconst * gamma_value(alpha, ctx).pow_rational(Rational(-e));

  const BigReal eps = BigReal::pow2(-(wb - 8), wb);
  BigReal tail(wb);
  BigReal prev_abs(wb);
  int grew = 0;
  bool reached = false;
  for (size_t j = 0; j < J; ++j) {
    if (w[j].is_zero()) continue;
    BigReal term = hurwitz_zeta(s0 + Rational(static_cast<long>(j)), K, ctx) * w[j];
    BigReal a = term.abs();
    if (j > 4 && !(a < prev_abs)) {
      if (++grew >= 3) break;  // asymptotic turnover
    } else {
      grew = 0;
    }
    tail += term;
    prev_abs = a;
    if (j > 8 && a < eps) {
      reached = true;
      break;
    }
  }
  if (!reached && prev_abs >= eps)
    throw InstabilityError("asymptotic tail stalled above tolerance at split " +
                           std::to_string(K));
  return head + dconst * tail;
}

}  // namespace

SlowSumResult sum_slow(const SlowSeries& s, const PrecisionContext& ctx) {
  for (const auto& [alpha, e] : s.pochs) {
    if (e == 0) throw DomainError("Gamma-quotient factor has exponent 0");
    if (alpha.sign() <= 0)
      throw DomainError("Gamma-quotient factor (" + alpha.to_string() + ")_k must have alpha > 0");
  }
  const Rational s0 = slow_decay_exponent(s);
  if (!(s0 > Rational(1)))
    throw ConvergenceError("series terms decay like k^-(" + s0.to_string() +
                           "): not convergent");
  const long wb = ctx.working_bits;
  const long K = std::max<long>(48, static_cast<long>(0.36 * static_cast<double>(wb)));
  BigReal v1 = sum_slow_at_split(s, ctx, K);
  BigReal v2 = sum_slow_at_split(s, ctx, K + 24);
  if (agree_digits(v1, v2, ctx.target_digits + 20) < ctx.target_digits)
    throw InstabilityError("asymptotic tail evaluations at splits " + std::to_string(K) +
                           " and " + std::to_string(K + 24) + " disagree");
  SlowSumResult r{v2, K + 24, "asymptotic"};
  return r;
}

}  // namespace piharmonic
