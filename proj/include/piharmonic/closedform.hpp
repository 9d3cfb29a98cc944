#pragma once

#include <memory>
#include <string>
#include <vector>

#include "piharmonic/bigreal.hpp"
#include "piharmonic/rational.hpp"

namespace piharmonic {

// Exact closed-form expression tree for right-hand sides: rationals combined
// with pi, log 2, the Euler-Mascheroni constant, and the gamma family at
// positive rational arguments. Evaluation is deferred so one tree can be
// evaluated at any precision.
class ClosedForm {
 public:
  ClosedForm();  // zero

  static ClosedForm rational(const Rational& q);
  static ClosedForm integer(long v);
  static ClosedForm pi();
  static ClosedForm log2();
  static ClosedForm euler_gamma();
  // Arguments must be positive; evaluation throws DomainError otherwise.
  static ClosedForm gamma(const Rational& x);
  static ClosedForm digamma(const Rational& x);
  static ClosedForm trigamma(const Rational& x);

  ClosedForm operator+(const ClosedForm& o) const;
  ClosedForm operator-(const ClosedForm& o) const;
  ClosedForm operator*(const ClosedForm& o) const;
  ClosedForm operator/(const ClosedForm& o) const;
  ClosedForm operator-() const;
  // Rational exponent with even denominator requires a positive base.
  ClosedForm pow(const Rational& e) const;

  ClosedForm scaled(const Rational& q) const;

  BigReal eval(const PrecisionContext& ctx) const;
  std::string to_string() const;

 private:
  struct Node;
  explicit ClosedForm(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
};

}  // namespace piharmonic
