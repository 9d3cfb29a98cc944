#pragma once

#include <mpfr.h>

#include <string>

#include "piharmonic/rational.hpp"

namespace piharmonic {

// Precision policy for one verification run: decimal target plus the binary
// working precision derived from it (ceil(digits*log2(10)) + 64 guard bits).
struct PrecisionContext {
    explicit PrecisionContext(int target_digits);
    int target_digits;
    long working_bits;
};

// Arbitrary-precision real backed by one mpfr_t. Every value carries its own
// precision; arithmetic rounds to nearest at the wider operand's precision.
class BigReal {
  public:
    explicit BigReal(long prec_bits);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    static BigReal from_rational(const Rational& q, long prec_bits);
    static BigReal from_long(long v, long prec_bits);
    // 2^e, exact.
    static BigReal pow2(long e, long prec_bits);

    long precision() const { return mpfr_get_prec(x_); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    BigReal operator-() const;
    BigReal abs() const;
    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);

    friend BigReal operator*(const BigReal& a, const Rational& q);
    friend BigReal operator/(const BigReal& a, long d);

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

    BigReal sqrt() const;
    BigReal ln() const;    // requires positive argument
    BigReal exp() const;
    // x^(p/q) for positive x (q-th root then integer power).
    BigReal pow_rational(const Rational& e) const;

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    // Scientific notation with `digits` significant digits.
    std::string to_decimal(int digits) const;

  private:
    mpfr_t x_;
};

// Number of agreeing decimal digits: floor(-log10(|x-y| / max(|x|, 1))),
// 0 when the signs differ, capped at cap_digits (an exact match reports the
// cap). The second overload caps from the operands' precision.
int agree_digits(const BigReal& x, const BigReal& y, int cap_digits);
int agree_digits(const BigReal& x, const BigReal& y);

}  // namespace piharmonic
