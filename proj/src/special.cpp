#include "piharmonic/special.hpp"

#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"

namespace piharmonic {

namespace {

void require_positive(const Rational& x) {
    if (x.sign() > 0) return;
    if (x.is_integer()) throw PoleError("gamma family pole at " + x.to_string());
    throw DomainError("gamma family requires a positive argument, got " + x.to_string());
}

// Shift so that X = x + m is large enough for the Stirling tail to reach
// 2^-(wp) before its terms turn around; X ~ 0.26*wp bits keeps the Bernoulli
// index moderate.
long shift_amount(const Rational& x, long wp) {
    long target = (wp * 26) / 100 + 16;
    if (x >= Rational(target)) return 0;
    Rational gap = Rational(target) - x;
    mpz_class m;
    mpz_cdiv_q(m.get_mpz_t(), gap.num().get_mpz_t(), gap.den().get_mpz_t());
    return mpz_get_si(m.get_mpz_t());
}

// Sums c_j * X^{-(start + 2j)} for j = 0, 1, ... where coef(j) supplies c_j,
// stopping once a term drops below eps. Terms must keep shrinking until then;
// growth first means X was too small for this precision.
template <typename CoefFn>
BigReal stirling_tail(const BigReal& x_inv, long start_power, const BigReal& eps, CoefFn coef) {
    BigReal inv2 = x_inv * x_inv;
    BigReal pw = BigReal::from_long(1, x_inv.precision());
    for (long i = 0; i < start_power; ++i) pw *= x_inv;
    BigReal acc(x_inv.precision());
    BigReal prev = pw.abs();
    const long jmax = x_inv.precision();
    for (long j = 1; j <= jmax; ++j) {
        BigReal term = pw * coef(j);
        acc += term;
        BigReal ta = term.abs();
        if (ta < eps) return acc;
        if (j > 4 && ta > prev) throw InstabilityError("asymptotic gamma series stalled before reaching precision");
        prev = ta;
        pw *= inv2;
    }
    throw ConvergenceError("asymptotic gamma series did not terminate");
}

}  // namespace

BigReal gamma_ln(const Rational& x, const PrecisionContext& ctx) {
    require_positive(x);
    const long wp = ctx.working_bits + 64;
    const long m = shift_amount(x, wp);
    const Rational big_x = x + Rational(m);
    const BigReal one = BigReal::from_long(1, wp);
    const BigReal xr = BigReal::from_rational(big_x, wp);
    const BigReal eps = BigReal::pow2(-(wp + 4), wp);
    BigReal tail = stirling_tail(one / xr, 1, eps, [](long j) {
        return bernoulli(2 * static_cast<unsigned long>(j)) / Rational(2 * j * (2 * j - 1));
    });
    BigReal half_log_2pi = (const_pi_bits(wp) + const_pi_bits(wp)).ln() / 2;
    BigReal ln_x = xr.ln();
    BigReal result = (xr - BigReal::from_rational(Rational(1, 2), wp)) * ln_x - xr + half_log_2pi + tail;
    // ln Gamma(x) = ln Gamma(x + m) - ln prod_{j<m} (x + j).
    if (m > 0) {
        Rational prod(1);
        for (long j = 0; j < m; ++j) prod *= x + Rational(j);
        result -= BigReal::from_rational(prod, wp).ln();
    }
    BigReal out(ctx.working_bits);
    mpfr_set(out.raw(), result.raw(), MPFR_RNDN);
    return out;
}

BigReal gamma_value(const Rational& x, const PrecisionContext& ctx) {
    // Exponentiate at the wider internal precision before rounding out.
    PrecisionContext inner = ctx;
    inner.working_bits += 64;
    BigReal g = gamma_ln(x, inner).exp();
    BigReal out(ctx.working_bits);
    mpfr_set(out.raw(), g.raw(), MPFR_RNDN);
    return out;
}

BigReal digamma(const Rational& x, const PrecisionContext& ctx) {
    require_positive(x);
    const long wp = ctx.working_bits + 64;
    const long m = shift_amount(x, wp);
    const Rational big_x = x + Rational(m);
    const BigReal one = BigReal::from_long(1, wp);
    const BigReal xr = BigReal::from_rational(big_x, wp);
    const BigReal eps = BigReal::pow2(-(wp + 4), wp);
    BigReal tail = stirling_tail(one / xr, 2, eps, [](long j) {
        return bernoulli(2 * static_cast<unsigned long>(j)) / Rational(2 * j);
    });
    BigReal result = xr.ln() - one / (xr + xr) - tail;
    // psi(x) = psi(x + m) - sum_{j<m} 1/(x + j).
    if (m > 0) {
        Rational corr(0);
        for (long j = 0; j < m; ++j) corr += (x + Rational(j)).inverse();
        result -= BigReal::from_rational(corr, wp);
    }
    BigReal out(ctx.working_bits);
    mpfr_set(out.raw(), result.raw(), MPFR_RNDN);
    return out;
}

BigReal trigamma(const Rational& x, const PrecisionContext& ctx) {
    require_positive(x);
    const long wp = ctx.working_bits + 64;
    const long m = shift_amount(x, wp);
    const Rational big_x = x + Rational(m);
    const BigReal one = BigReal::from_long(1, wp);
    const BigReal xr = BigReal::from_rational(big_x, wp);
    const BigReal eps = BigReal::pow2(-(wp + 4), wp);
    BigReal tail = stirling_tail(one / xr, 3, eps, [](long j) {
        return bernoulli(2 * static_cast<unsigned long>(j));
    });
    BigReal inv = one / xr;
    BigReal result = inv + (inv * inv) / 2 + tail;
    // psi'(x) = psi'(x + m) + sum_{j<m} 1/(x + j)^2.
    if (m > 0) {
        Rational corr(0);
        for (long j = 0; j < m; ++j) corr += (x + Rational(j)).pow_int(-2);
        result += BigReal::from_rational(corr, wp);
    }
    BigReal out(ctx.working_bits);
    mpfr_set(out.raw(), result.raw(), MPFR_RNDN);
    return out;
}

Rational gamma_half_coef(long n) {
    if (n >= 0) {
        unsigned long m = static_cast<unsigned long>(n);
        return Rational(factorial(2 * m), factorial(m)) / Rational(4).pow_int(n);
    }
    unsigned long m = static_cast<unsigned long>(-n);
    return Rational(-4).pow_int(static_cast<long>(m)) * Rational(factorial(m), factorial(2 * m));
}

}  // namespace piharmonic
