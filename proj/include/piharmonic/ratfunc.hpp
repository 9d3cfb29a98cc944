#pragma once

#include <map>
#include <string>
#include <vector>

#include "piharmonic/rational.hpp"

namespace piharmonic {

// Dense bivariate polynomial over Rational in the summation index k and one
// optional parameter p. coeffs_[i][j] multiplies k^i p^j.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rational& c);
    static Poly var_k();
    static Poly var_p();
    // a + b*k + c*p convenience.
    static Poly linear(const Rational& a, const Rational& b_k, const Rational& c_p);

    bool is_zero() const;
    int deg_k() const;
    int deg_p() const;
    Rational coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rational& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& s) const;

    Poly derivative_k() const;
    Poly derivative_p() const;
    Poly substitute_p(const Rational& p0) const;  // result has deg_p 0
    Rational eval(const Rational& k, const Rational& p) const;
    Rational eval_k(const Rational& k) const;  // requires deg_p == 0

    // Laurent expansion at k = infinity: returns c such that
    // poly(k) = k^{deg} * sum_j c[j] k^{-j}. Requires deg_p == 0.
    std::vector<Rational> coeffs_desc_k() const;

    std::string to_string(const std::string& kname, const std::string& pname) const;

  private:
    void trim();
    std::vector<std::vector<Rational>> coeffs_;
};

// Quotient of two Polys. No polynomial gcd is attempted; construction only
// normalizes the scalar content so the denominator has coprime integer
// coefficients with a positive leading coefficient.
class RationalFunction {
  public:
    RationalFunction() : num_(Rational(0)), den_(Rational(1)) {}
    explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational eval(const Rational& k, const Rational& p) const;
    Rational eval_k(const Rational& k) const;
    RationalFunction substitute_p(const Rational& p0) const;

    RationalFunction derivative_k() const;
    RationalFunction derivative_p() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator*(const Rational& s) const;

    std::string to_string(const std::string& kname = "k", const std::string& pname = "p") const;

  private:
    void normalize();
    Poly num_, den_;
};

// Evaluation with named bindings; "k" is the index variable and any other
// single name is the parameter. Missing bindings raise DomainError.
Rational rf_eval(const RationalFunction& rf, const std::map<std::string, Rational>& bindings,
                 const std::string& param_name = "p");

// Partial derivative with respect to `var` ("k" or the parameter name).
RationalFunction rf_derivative(const RationalFunction& rf, const std::string& var,
                               const std::string& param_name = "p");

}  // namespace piharmonic
