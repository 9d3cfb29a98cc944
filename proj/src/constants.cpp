#include "piharmonic/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "piharmonic/errors.hpp"

namespace piharmonic {

namespace {

BigReal round_to(const BigReal& v, long bits) {
    BigReal r(bits);
    mpfr_set(r.raw(), v.raw(), MPFR_RNDN);
    return r;
}

// Tag keeps each constant's cache distinct: the compute functions all share
// one function-pointer type, so the type alone cannot separate the statics.
template <int Tag, typename F>
BigReal cached_const(long bits, F compute) {
    static std::mutex m;
    static std::map<long, BigReal> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(bits);
    if (it == cache.end()) it = cache.emplace(bits, compute(bits)).first;
    return it->second;
}

// Gauss-Legendre (AGM) iteration; doubles correct bits per step.
BigReal compute_pi(long bits) {
    const long wp = bits + 64;
    BigReal a = BigReal::from_long(1, wp);
    BigReal b = BigReal::from_rational(Rational(1, 2), wp).sqrt();
    BigReal t = BigReal::from_rational(Rational(1, 4), wp);
    BigReal p = BigReal::from_long(1, wp);
    const BigReal thresh = BigReal::pow2(-(wp - 8), wp);
    for (int i = 0; i < 64 && (a - b).abs() > thresh; ++i) {
        BigReal an = (a + b) / 2;
        BigReal bn = (a * b).sqrt();
        BigReal d = a - an;
        t -= (p * d) * d;
        p += p;
        a = an;
        b = bn;
    }
    BigReal s = a + b;
    return round_to((s * s) / (t * BigReal::from_long(4, wp)), bits);
}

BigReal pi_bits(long bits) {
    return cached_const<0>(bits, compute_pi);
}

BigReal compute_log2(long bits) {
    BigReal r(bits);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

// One Brent-McMillan evaluation: A(n)/B(n) - ln n with
// B = sum (n^k/k!)^2, A = sum (n^k/k!)^2 H_k; error decays like e^{-4n}.
// The summands peak near e^{2n}, so the working precision carries
// 2n*log2(e) extra bits.
BigReal euler_mcmillan(long n, long bits) {
    const long wp = bits + static_cast<long>(2.8853900817779268 * static_cast<double>(n)) + 64;
    const BigReal one = BigReal::from_long(1, wp);
    const BigReal nn = BigReal::from_long(n * n, wp);
    const BigReal eps = BigReal::pow2(-wp, wp);
    BigReal a = one;
    BigReal big_a = BigReal(wp);
    BigReal big_b = one;
    BigReal h = BigReal(wp);
    bool converged = false;
    const long kmax = 8 * n + 100;
    for (long k = 1; k <= kmax; ++k) {
        a = (a * nn) / (k * k);
        h += one / k;
        big_a += a * h;
        big_b += a;
        if (k > n && a < big_b * eps) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError("euler gamma series did not converge");
    BigReal u = big_a / big_b - BigReal::from_long(n, wp).ln();
    return round_to(u, bits);
}

BigReal compute_euler(long bits) {
    const long n = static_cast<long>(std::ceil(static_cast<double>(bits + 32) * 0.17328679513998632)) + 4;
    BigReal u1 = euler_mcmillan(n, bits);
    BigReal u2 = euler_mcmillan(n + 8, bits);
    if ((u1 - u2).abs() > BigReal::pow2(-(bits - 4), bits)) {
        throw InstabilityError("euler gamma evaluations at n and n+8 disagree");
    }
    return u1;
}

BigReal atan_inv(long q, long wp) {
    const BigReal one = BigReal::from_long(1, wp);
    const BigReal eps = BigReal::pow2(-(wp + 4), wp);
    const long q2 = q * q;
    BigReal p = one / q;
    BigReal s(wp);
    for (long j = 0;; ++j) {
        BigReal term = p / (2 * j + 1);
        if (j % 2 == 0) {
            s += term;
        } else {
            s -= term;
        }
        p = p / q2;
        if (p < eps) break;
        if (j > wp) throw ConvergenceError("atan series did not converge");
    }
    return s;
}

}  // namespace

BigReal const_pi(const PrecisionContext& ctx) {
    return pi_bits(ctx.working_bits);
}

BigReal const_log2(const PrecisionContext& ctx) {
    return cached_const<1>(ctx.working_bits, compute_log2);
}

BigReal const_euler_gamma(const PrecisionContext& ctx) {
    return cached_const<2>(ctx.working_bits, compute_euler);
}

BigReal const_pi_bits(long bits) {
    return pi_bits(bits);
}

BigReal const_log2_bits(long bits) {
    return cached_const<1>(bits, compute_log2);
}

BigReal const_euler_gamma_bits(long bits) {
    return cached_const<2>(bits, compute_euler);
}

BigReal cos_pi(const Rational& r, const PrecisionContext& ctx) {
    const long wb = ctx.working_bits;
    // x = r mod 2, exactly.
    mpz_class two_den = 2 * r.den();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), two_den.get_mpz_t());
    Rational x = r - Rational(q) * Rational(2);
    if (x > Rational(1)) x = Rational(2) - x;
    long sgn = 1;
    if (x > Rational(1, 2)) {
        sgn = -1;
        x = Rational(1) - x;
    }
    if (x.is_zero()) return BigReal::from_long(sgn, wb);
    if (x == Rational(1, 2)) return BigReal(wb);
    if (x == Rational(1, 3)) return BigReal::from_rational(Rational(sgn, 2), wb);
    const long wp = wb + 32;
    BigReal t = BigReal::from_rational(x, wp) * pi_bits(wp);
    BigReal c(wp);
    mpfr_cos(c.raw(), t.raw(), MPFR_RNDN);
    if (sgn < 0) c = -c;
    return round_to(c, wb);
}

BigReal machin_pi(const PrecisionContext& ctx) {
    const long wp = ctx.working_bits + 64;
    BigReal s = atan_inv(5, wp) * Rational(16) - atan_inv(239, wp) * Rational(4);
    return round_to(s, ctx.working_bits);
}

BigReal atanh_log2(const PrecisionContext& ctx) {
    const long wp = ctx.working_bits + 64;
    const BigReal one = BigReal::from_long(1, wp);
    const BigReal eps = BigReal::pow2(-(wp + 4), wp);
    BigReal p = one / 3;
    BigReal s(wp);
    for (long j = 0;; ++j) {
        s += p / (2 * j + 1);
        p = p / 9;
        if (p < eps) break;
        if (j > wp) throw ConvergenceError("atanh series did not converge");
    }
    return round_to(s + s, ctx.working_bits);
}

}  // namespace piharmonic
