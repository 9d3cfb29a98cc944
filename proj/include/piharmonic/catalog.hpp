#pragma once

#include <string>
#include <vector>

#include "piharmonic/closedform.hpp"
#include "piharmonic/hyperg.hpp"
#include "piharmonic/series.hpp"

namespace piharmonic {

// One fixed series identity: sum of series == rhs.
struct IdentityRecord {
  std::string id;
  std::string anchor;  // weight-formula text
  SeriesSpec series;
  ClosedForm rhs;
  bool alternating_slow = false;  // |ratio limit| = 1, needs acceleration
};

// Pochhammer factor whose argument moves linearly with the family parameter:
// (alpha0 + slope*p)_{mult*k}^{expnt}.
struct ParamPochFactor {
  Rational alpha0;
  Rational slope;
  int mult = 1;
  int expnt = 1;
};

// Gamma(a0 + slope*p)^{expnt} on the closed-form side.
struct GammaFactorSym {
  Rational a0;
  Rational slope;
  int expnt = 1;
};

// A one-parameter family of identities, exact in the parameter.
struct ParamFamily {
  std::string id;
  std::string param_name;
  std::string anchor;
  std::vector<ParamPochFactor> factors;
  Rational z;
  RationalFunction weight;  // bivariate in (k, p)
  std::vector<GammaFactorSym> rhs_gammas;
  ClosedForm rhs_const;
  Rational domain_lo, domain_hi;  // open interval
  std::vector<Rational> test_points;
  bool alternating_slow = false;
};

// Documented collapse of a family (or its parameter derivative) onto a fixed
// record: family term/value at `at` equals scale * fixed term/value.
struct Specialization {
  std::string family_id;
  Rational at;
  bool derivative = false;
  std::string fixed_id;
  Rational scale;
};

const std::vector<IdentityRecord>& catalog_records();
const IdentityRecord& catalog_record(const std::string& id);
const std::vector<ParamFamily>& catalog_families();
const ParamFamily& catalog_family(const std::string& id);
const std::vector<Specialization>& catalog_specializations();

// Instantiation at an exact parameter value (DomainError outside the open
// domain interval; PoleError from a denominator factor).
SeriesSpec family_series(const ParamFamily& f, const Rational& p0);
ClosedForm family_rhs(const ParamFamily& f, const Rational& p0);

// Parameter derivative of both sides, assembled exactly: the series weight
// becomes w*L_k + dw/dp with L_k the logarithmic derivative of the Pochhammer
// base (one shifted harmonic number per moving factor), and the closed form
// gains the matching digamma factor.
SeriesSpec family_derivative_series(const ParamFamily& f, const Rational& p0);
ClosedForm family_derivative_rhs(const ParamFamily& f, const Rational& p0);

struct VerifyReport {
  std::string id;
  std::string anchor;
  int digits_requested = 0;
  int digits_matched = 0;
  std::string lhs, rhs;
  long terms = 0;
  std::string method;
  bool pass = false;
  double ms = 0.0;
};

VerifyReport verify_record(const IdentityRecord& rec, int digits);
VerifyReport verify_record(const std::string& id, int digits);
VerifyReport verify_family_point(const ParamFamily& f, const Rational& p0, int digits);
VerifyReport verify_family_derivative_point(const ParamFamily& f, const Rational& p0, int digits);

// (S(p0+h) - S(p0-h)) / 2h at h = 10^{-10}, 60-digit context, against the
// assembled derivative series; pass needs >= 15 agreeing digits.
struct CentralDiffReport {
  std::string id;
  Rational at;
  int agree = 0;
  std::string numeric, analytic;
  bool pass = false;
};
CentralDiffReport central_difference_check(const ParamFamily& f, const Rational& p0);

// Classical summation/transformation checks; kind is "dougall", "chu", or
// "chu14". The slowly convergent side goes through the asymptotic tail
// machinery, the geometric side through direct summation.
struct TransformTuple {
  Rational a, b, c, d, e;  // e ignored for dougall
};
VerifyReport verify_transformation(const std::string& kind, const TransformTuple& t, int digits);

// Exact linear relations between catalog entries, checked per-term as exact
// rationals up to term_limit and at the value level to `digits`.
struct CombinationReport {
  std::string id;
  bool term_level_pass = false;
  long terms_checked = 0;
  int digits_matched = 0;
  bool pass = false;
};
std::vector<CombinationReport> combination_checks(int digits, long term_limit = 200);

}  // namespace piharmonic
