#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "piharmonic/errors.hpp"

namespace piharmonic {

// Arbitrary-precision rational with a canonical representation:
// gcd(num, den) = 1, den > 0, and zero is stored as 0/1.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    explicit Rational(mpz_class n) : q_(std::move(n)) {}
    Rational(mpz_class n, mpz_class d);
    explicit Rational(mpq_class q);

    // Accepts an optionally signed integer or fraction, e.g. "-3", "5/7".
    // Decimal notation is rejected on purpose: callers must pass exact values.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_negative() const { return sgn(q_) < 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const;
    // x^e for integer e; e < 0 requires x != 0.
    Rational pow_int(long e) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // "n" when integral, otherwise "n/d".
    std::string to_string() const;
    // Exact integer value; throws DomainError if not an integer or out of range.
    long to_long() const;
    double to_double() const { return q_.get_d(); }

  private:
    mpq_class q_;  // invariant: canonicalized
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned long n);

// Bernoulli number B_n with the B_1 = -1/2 convention, computed once via the
// exact recurrence sum_{j<=n} C(n+1,j) B_j = 0 and cached for reuse.
const Rational& bernoulli(unsigned long n);

// Bernoulli polynomial B_n(x) = sum_j C(n,j) B_j x^{n-j}.
Rational bernoulli_poly(unsigned long n, const Rational& x);

}  // namespace piharmonic
