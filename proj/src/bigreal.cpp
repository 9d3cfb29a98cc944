#include "piharmonic/bigreal.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace piharmonic {

PrecisionContext::PrecisionContext(int digits) : target_digits(digits) {
    if (digits < 1) throw DomainError("target_digits must be >= 1");
    working_bits = static_cast<long>(std::ceil(digits * 3.321928094887363)) + 64;
}

namespace {
long checked_prec(long bits) {
    if (bits < MPFR_PREC_MIN || bits > 1L << 26) throw DomainError("unsupported precision " + std::to_string(bits));
    return bits;
}
}  // namespace

BigReal::BigReal(long prec_bits) { mpfr_init2(x_, checked_prec(prec_bits)); mpfr_set_zero(x_, 1); }

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(x_); }

BigReal BigReal::from_rational(const Rational& q, long prec_bits) {
    BigReal r(prec_bits);
    mpfr_set_q(r.x_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_long(long v, long prec_bits) {
    BigReal r(prec_bits);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow2(long e, long prec_bits) {
    BigReal r(prec_bits);
    mpfr_set_si(r.x_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.x_, r.x_, e, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(precision());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
}

#define PIHARMONIC_BINOP(name, fn)                                  \
    BigReal operator name(const BigReal& a, const BigReal& b) {     \
        BigReal r(std::max(a.precision(), b.precision()));          \
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);                            \
        return r;                                                   \
    }

PIHARMONIC_BINOP(+, mpfr_add)
PIHARMONIC_BINOP(-, mpfr_sub)
PIHARMONIC_BINOP(*, mpfr_mul)
#undef PIHARMONIC_BINOP

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw DomainError("BigReal division by zero");
    BigReal r(std::max(a.precision(), b.precision()));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigReal operator*(const BigReal& a, const Rational& q) {
    BigReal r(a.precision());
    mpfr_mul_q(r.raw(), a.raw(), q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, long d) {
    if (d == 0) throw DomainError("BigReal division by zero");
    BigReal r(a.precision());
    mpfr_div_si(r.raw(), a.raw(), d, MPFR_RNDN);
    return r;
}

BigReal BigReal::sqrt() const {
    if (sign() < 0) throw DomainError("sqrt of a negative value");
    BigReal r(precision());
    mpfr_sqrt(r.x_, x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::ln() const {
    if (sign() <= 0) throw DomainError("ln of a nonpositive value");
    BigReal r(precision());
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::exp() const {
    BigReal r(precision());
    mpfr_exp(r.x_, x_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow_rational(const Rational& e) const {
    if (e.is_integer()) {
        BigReal r(precision());
        long ei = e.to_long();
        mpfr_pow_si(r.x_, x_, ei, MPFR_RNDN);
        return r;
    }
    if (sign() <= 0) throw DomainError("rational power of a nonpositive value");
    const unsigned long q = mpz_get_ui(e.den().get_mpz_t());
    BigReal root(precision());
    mpfr_rootn_ui(root.x_, x_, q, MPFR_RNDN);
    BigReal r(precision());
    if (!e.num().fits_slong_p()) throw DomainError("power numerator too large");
    mpfr_pow_si(r.x_, root.x_, e.num().get_si(), MPFR_RNDN);
    return r;
}

std::string BigReal::to_decimal(int digits) const {
    if (digits < 1) digits = 1;
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, x_);
    return std::string(buf.data());
}

int agree_digits(const BigReal& x, const BigReal& y, int cap_digits) {
    if (cap_digits < 0) cap_digits = 0;
    if (mpfr_cmp(x.raw(), y.raw()) == 0) return cap_digits;
    if (x.sign() * y.sign() < 0) return 0;
    BigReal diff = (x - y).abs();
    BigReal scale = x.abs();
    if (mpfr_cmp_si(scale.raw(), 1) < 0) scale = BigReal::from_long(1, x.precision());
    BigReal rel = diff / scale;
    if (rel.is_zero()) return cap_digits;
    // floor(-log10(rel)) via a double-precision log of the scaled mantissa.
    mpfr_exp_t e2 = mpfr_get_exp(rel.raw());
    double mant = mpfr_get_d_2exp(&e2, rel.raw(), MPFR_RNDN);
    const double log10r = std::log10(std::fabs(mant)) + static_cast<double>(e2) * 0.30102999566398120;
    const double d = -log10r;
    if (d <= 0) return 0;
    if (d >= static_cast<double>(cap_digits)) return cap_digits;
    return static_cast<int>(std::floor(d));
}

int agree_digits(const BigReal& x, const BigReal& y) {
    const long prec = std::min(x.precision(), y.precision());
    const int cap = static_cast<int>(static_cast<double>(prec - 8) * 0.30102999566398120);
    return agree_digits(x, y, cap);
}

}  // namespace piharmonic
