#include "piharmonic/catalog.hpp"

#include <chrono>
#include <initializer_list>
#include <tuple>

#include "piharmonic/asymp.hpp"
#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"

namespace piharmonic {

namespace {

using R = Rational;

RationalFunction klin(const R& b0, const R& bk) {
  return RationalFunction(Poly::linear(b0, bk, R(0)));
}
RationalFunction klin(long b0, long bk) { return klin(R(b0), R(bk)); }

// sum of coef * k^i * p^j monomials
Poly bipoly(std::initializer_list<std::tuple<int, int, long>> terms) {
  Poly out;
  for (const auto& [i, j, c] : terms) out.set_coeff(i, j, R(c));
  return out;
}

RationalFunction kquad(long c2, long c1, long c0) {
  return RationalFunction(bipoly({{2, 0, c2}, {1, 0, c1}, {0, 0, c0}}));
}

HarmonicKey HK(int order, int mult) { return HarmonicKey{order, mult, R(0)}; }
HarmonicKey HS(const R& shift) { return HarmonicKey{1, 1, shift}; }

WeightExpr weight_of(RationalFunction base,
                     std::initializer_list<std::pair<HarmonicKey, RationalFunction>> hs) {
  WeightExpr w;
  w.base = std::move(base);
  for (const auto& [key, coef] : hs) w.harmonic.push_back({key, coef});
  return w;
}

std::vector<PochFactor> half3_base() {
  return {{R(1, 2), 1, 3}, {R(1), 1, -3}};
}
std::vector<PochFactor> quarter_base() {
  return {{R(1, 2), 1, 1}, {R(1, 4), 1, 1}, {R(3, 4), 1, 1}, {R(1), 1, -3}};
}
std::vector<PochFactor> wei_base() {
  return {{R(1, 2), 1, 3}, {R(1, 4), 1, 1}, {R(3, 4), 1, 1}, {R(1), 1, -5}};
}

SeriesSpec mk_series(const std::vector<PochFactor>& fs, const R& z, WeightExpr w,
                     long start = 0) {
  SeriesSpec s;
  s.start = start;
  s.ratio = pochhammer_ratio(fs, z);
  s.t0 = pochhammer_product(fs, z, start);
  s.weight = std::move(w);
  return s;
}

ClosedForm cfr(const R& q) { return ClosedForm::rational(q); }
ClosedForm over_pi(long n) { return ClosedForm::integer(n) / ClosedForm::pi(); }
ClosedForm log2_over_pi(const R& c) {
  return cfr(c) * ClosedForm::log2() / ClosedForm::pi();
}
ClosedForm psi_cf(long n, long d) { return ClosedForm::digamma(R(n, d)); }
ClosedForm inv_sqrt_pi() { return ClosedForm::pi().pow(R(-1, 2)); }

std::vector<IdentityRecord> build_records() {
  std::vector<IdentityRecord> v;
  RationalFunction pre203 = klin(3, 20);
  RationalFunction pre425 = klin(5, 42);
  RationalFunction pre61 = klin(1, 6);
  RationalFunction pre41 = klin(1, 4);
  RationalFunction preq = kquad(120, 34, 3);
  // base with a 1/(2k+1) piece: (a*k + b) / (2k+1)
  auto over2k1 = [](long a, long b) {
    return RationalFunction(Poly::linear(R(b), R(a), R(0)),
                            Poly::linear(R(1), R(2), R(0)));
  };

  v.push_back({"ra1", "(4k+1)",
               mk_series(half3_base(), R(-1), WeightExpr::from_rf(pre41)),
               over_pi(2), true});
  v.push_back({"ra2", "(6k+1)",
               mk_series(half3_base(), R(1, 4), WeightExpr::from_rf(pre61)),
               over_pi(4), false});
  v.push_back({"ra3", "(20k+3)",
               mk_series(quarter_base(), R(-1, 4), WeightExpr::from_rf(pre203)),
               over_pi(8), false});
  v.push_back({"ra4", "(42k+5)",
               mk_series(half3_base(), R(1, 64), WeightExpr::from_rf(pre425)),
               over_pi(16), false});

  v.push_back({"thm-(1)", "(6k+1)H_k-2",
               mk_series(half3_base(), R(1, 4),
                         weight_of(klin(-2, 0), {{HK(1, 1), pre61}})),
               log2_over_pi(R(-8)), false});
  v.push_back({"thm-(2)", "(6k+1)H_{2k}-1",
               mk_series(half3_base(), R(1, 4),
                         weight_of(klin(-1, 0), {{HK(1, 2), pre61}})),
               log2_over_pi(R(-8, 3)), false});
  v.push_back({"thm-(3)", "(20k+3)(H_{2k}-3H_k)+12",
               mk_series(quarter_base(), R(-1, 4),
                         weight_of(klin(12, 0),
                                   {{HK(1, 2), pre203}, {HK(1, 1), pre203 * R(-3)}})),
               log2_over_pi(R(56)), false});
  v.push_back({"thm-(4)", "(42k+5)(H_{2k}-H_k)+7",
               mk_series(half3_base(), R(1, 64),
                         weight_of(klin(7, 0),
                                   {{HK(1, 2), pre425}, {HK(1, 1), -pre425}})),
               log2_over_pi(R(32)), false});
  v.push_back({"thm-(5)", "(4k+1)H_{2k}",
               mk_series(half3_base(), R(-1),
                         weight_of(RationalFunction(), {{HK(1, 2), pre41}})),
               log2_over_pi(R(-2)), true});
  v.push_back({"thm-(H1)", "(20k+3)(2H_{4k}-H_{2k}+H_k)-2",
               mk_series(quarter_base(), R(-1, 4),
                         weight_of(klin(-2, 0), {{HK(1, 4), pre203 * R(2)},
                                                 {HK(1, 2), -pre203},
                                                 {HK(1, 1), pre203}})),
               log2_over_pi(R(-16)), false});
  v.push_back({"thm-(2H)", "(120k^2+34k+3)(23H2_{2k}-7H2_k)+24, k>=1",
               mk_series(wei_base(), R(1, 16),
                         weight_of(klin(24, 0), {{HK(2, 2), preq * R(23)},
                                                 {HK(2, 1), preq * R(-7)}}),
                         1),
               cfr(R(16, 3)), false});

  v.push_back({"gid1", "(6k+1)(H_{2k}-H_k)+1",
               mk_series(half3_base(), R(1, 4),
                         weight_of(klin(1, 0), {{HK(1, 2), pre61}, {HK(1, 1), -pre61}})),
               log2_over_pi(R(16, 3)), false});
  v.push_back({"guillera32", "3(4k+1)H_k-2",
               mk_series(half3_base(), R(-1),
                         weight_of(klin(-2, 0), {{HK(1, 1), pre41 * R(3)}})),
               log2_over_pi(R(-12)), true});
  v.push_back({"wei", "(120k^2+34k+3)(H_{2k}-2H_k)+68k+9",
               mk_series(wei_base(), R(1, 16),
                         weight_of(klin(9, 68),
                                   {{HK(1, 2), preq}, {HK(1, 1), preq * R(-2)}})),
               log2_over_pi(R(128)) / ClosedForm::pi(), false});

  v.push_back({"aux-(2b4)", "(6k+1)(3H_{2k}-2H_k)+1",
               mk_series(half3_base(), R(1, 4),
                         weight_of(klin(1, 0), {{HK(1, 2), pre61 * R(3)},
                                                {HK(1, 1), pre61 * R(-2)}})),
               log2_over_pi(R(8)), false});
  v.push_back({"aux-(3b3)", "(20k+3)(H_{2k}+2H_k-4H_{4k})-14+1/(2k+1)",
               mk_series(quarter_base(), R(-1, 4),
                         weight_of(over2k1(-28, -13), {{HK(1, 2), pre203},
                                                       {HK(1, 1), pre203 * R(2)},
                                                       {HK(1, 4), pre203 * R(-4)}})),
               over_pi(8) * (psi_cf(1, 4) + psi_cf(3, 4) - cfr(R(2)) * psi_cf(1, 1)),
               false});
  v.push_back({"aux-(4c3)", "(20k+3)H_k-6+1/(2k+1)",
               mk_series(quarter_base(), R(-1, 4),
                         weight_of(over2k1(-12, -5), {{HK(1, 1), pre203}})),
               over_pi(4) * (psi_cf(1, 4) + psi_cf(3, 4) - cfr(R(2)) * psi_cf(1, 1)),
               false});
  v.push_back({"aux-(5d3)", "(20k+3)(2H_k(-3/4)-H_k(-1/4)+H_k-4)+8",
               mk_series(quarter_base(), R(-1, 4),
                         weight_of(klin(-4, -80), {{HS(R(-3, 4)), pre203 * R(2)},
                                                   {HS(R(-1, 4)), -pre203},
                                                   {HK(1, 1), pre203}})),
               over_pi(8) * (psi_cf(1, 2) + psi_cf(3, 4) - psi_cf(5, 4) - psi_cf(1, 1)),
               false});
  v.push_back({"aux-(6e3)", "(20k+3)(2H_k(-1/4)-H_k(-3/4)+H_k)-12",
               mk_series(quarter_base(), R(-1, 4),
                         weight_of(klin(-12, 0), {{HS(R(-1, 4)), pre203 * R(2)},
                                                  {HS(R(-3, 4)), -pre203},
                                                  {HK(1, 1), pre203}})),
               over_pi(8) * (psi_cf(1, 4) + psi_cf(1, 2) - psi_cf(3, 4) - psi_cf(1, 1)),
               false});
  v.push_back({"aux-(th6.4)", "(120k^2+34k+3)(7H2_{2k}-2H2_k)+18-9/(2k+1)",
               mk_series(wei_base(), R(1, 16),
                         weight_of(over2k1(36, 9), {{HK(2, 2), preq * R(7)},
                                                    {HK(2, 1), preq * R(-2)}})),
               cfr(R(32, 3)), false});
  v.push_back({"aux-(th6.33)", "(120k^2+34k+3)(12H2_{2k}-4H2_k)-16+24/(2k+1)",
               mk_series(wei_base(), R(1, 16),
                         weight_of(over2k1(-32, 8), {{HK(2, 2), preq * R(12)},
                                                     {HK(2, 1), preq * R(-4)}})),
               cfr(R(32, 3)), false});
  return v;
}

std::vector<ParamFamily> build_families() {
  std::vector<ParamFamily> v;

  {
    ParamFamily f;
    f.id = "th1";
    f.param_name = "c";
    f.anchor = "(4k+1)";
    f.factors = {{R(1, 2), R(0), 1, 2}, {R(0), R(1), 1, 1},
                 {R(1), R(0), 1, -2}, {R(3, 2), R(-1), 1, -1}};
    f.z = R(-1);
    f.weight = RationalFunction(Poly::linear(R(1), R(4), R(0)));
    f.rhs_gammas = {{R(3, 2), R(-1), 1}, {R(1), R(-1), -1}};
    f.rhs_const = ClosedForm::integer(2) * inv_sqrt_pi();
    f.domain_lo = R(0);
    f.domain_hi = R(3, 4);
    f.test_points = {R(1, 3), R(1, 2), R(3, 5)};
    f.alternating_slow = true;
    v.push_back(std::move(f));
  }
  {
    ParamFamily f;
    f.id = "1c2";
    f.param_name = "c";
    f.anchor = "(3k-c+1)/2";
    f.factors = {{R(1, 2), R(0), 1, 1}, {R(0), R(1), 1, 1}, {R(1), R(-1), 1, 1},
                 {R(1), R(0), 1, -2}, {R(3, 2), R(-1), 1, -1}};
    f.z = R(1, 4);
    f.weight = RationalFunction(Poly::linear(R(1, 2), R(3, 2), R(-1, 2)));
    f.rhs_gammas = {{R(3, 2), R(-1), 1}, {R(1), R(-1), -1}};
    f.rhs_const = inv_sqrt_pi();
    f.domain_lo = R(0);
    f.domain_hi = R(1);
    f.test_points = {R(1, 3), R(1, 2), R(2, 3)};
    v.push_back(std::move(f));
  }
  {
    ParamFamily f;
    f.id = "2b2";
    f.param_name = "b";
    f.anchor = "(6k^2-(4b-6)k-b+1)/(4k-2b+3)";
    f.factors = {{R(1, 2), R(0), 1, 2}, {R(1), R(-1), 1, 2},
                 {R(1), R(0), 1, -2}, {R(3, 2), R(-1), 2, -1}};
    f.z = R(1);
    f.weight = RationalFunction(
        bipoly({{2, 0, 6}, {1, 0, 6}, {1, 1, -4}, {0, 0, 1}, {0, 1, -1}}),
        Poly::linear(R(3), R(4), R(-2)));
    f.rhs_gammas = {{R(3, 2), R(-1), 1}, {R(1), R(-1), -1}};
    f.rhs_const = inv_sqrt_pi();
    f.domain_lo = R(0);
    f.domain_hi = R(1);
    f.test_points = {R(1, 3), R(1, 2), R(2, 3)};
    v.push_back(std::move(f));
  }
  {
    ParamFamily f;
    f.id = "3b1";
    f.param_name = "b";
    f.anchor = "(40k^2+(50-48b)k+16b^2-32b+15)/(16(4k-2b+3))";
    f.factors = {{R(1, 2), R(0), 1, 1}, {R(3, 4), R(-1), 1, 1}, {R(1), R(-1), 1, 1},
                 {R(5, 4), R(-1), 1, 1}, {R(1), R(0), 1, -1},
                 {R(3, 2), R(-1), 2, -1}, {R(3, 2), R(-1), 1, -1}};
    f.z = R(-1);
    f.weight = RationalFunction(
        bipoly({{2, 0, 40}, {1, 0, 50}, {1, 1, -48}, {0, 0, 15}, {0, 1, -32}, {0, 2, 16}}),
        Poly::linear(R(48), R(64), R(-32)));
    f.rhs_gammas = {{R(3, 2), R(-1), 2}, {R(3, 4), R(-1), -1}, {R(5, 4), R(-1), -1}};
    f.rhs_const = ClosedForm::integer(2).pow(R(1, 2)).scaled(R(1, 4));
    f.domain_lo = R(0);
    f.domain_hi = R(3, 4);
    f.test_points = {R(1, 3), R(1, 2), R(5, 8)};
    v.push_back(std::move(f));
  }
  {
    ParamFamily f;
    f.id = "4c1";
    f.param_name = "c";
    f.anchor = "(20k^2+(19-12c)k-5c+4)/(16(2k+1))";
    f.factors = {{R(1, 4), R(0), 1, 1}, {R(3, 4), R(0), 1, 1}, {R(0), R(1), 1, 1},
                 {R(1), R(-1), 1, 1}, {R(1), R(0), 2, -1}, {R(3, 2), R(-1), 1, -2}};
    f.z = R(-1);
    f.weight = RationalFunction(
        bipoly({{2, 0, 20}, {1, 0, 19}, {1, 1, -12}, {0, 0, 4}, {0, 1, -5}}),
        Poly::linear(R(16), R(32), R(0)));
    f.rhs_gammas = {{R(3, 2), R(-1), 2}, {R(3, 4), R(-1), -1}, {R(5, 4), R(-1), -1}};
    f.rhs_const = ClosedForm::integer(2).pow(R(1, 2)).scaled(R(1, 4));
    f.domain_lo = R(0);
    f.domain_hi = R(3, 4);
    f.test_points = {R(1, 3), R(1, 2), R(5, 8)};
    v.push_back(std::move(f));
  }
  {
    ParamFamily f;
    f.id = "5d1";
    f.param_name = "d";
    f.anchor = "(20k^2+(11-12d)k-d+1)/8";
    f.factors = {{R(1, 2), R(0), 1, 2}, {R(1, 4), R(0), 1, 1}, {R(0), R(1), 1, 1},
                 {R(1), R(-1), 1, 1}, {R(1), R(0), 1, -1}, {R(1), R(0), 2, -1},
                 {R(3, 2), R(-1), 1, -1}, {R(5, 4), R(-1), 1, -1}};
    f.z = R(-1);
    f.weight = RationalFunction(
        bipoly({{2, 0, 20}, {1, 0, 11}, {1, 1, -12}, {0, 0, 1}, {0, 1, -1}}),
        Poly(R(8)));
    f.rhs_gammas = {{R(3, 2), R(-1), 1}, {R(5, 4), R(-1), 1},
                    {R(1), R(-1), -1}, {R(3, 4), R(-1), -1}};
    f.rhs_const =
        ClosedForm::gamma(R(3, 4)) * inv_sqrt_pi() / ClosedForm::gamma(R(1, 4));
    f.domain_lo = R(0);
    f.domain_hi = R(3, 4);
    f.test_points = {R(1, 5), R(1, 4), R(1, 3)};
    v.push_back(std::move(f));
  }
  {
    ParamFamily f;
    f.id = "6e1";
    f.param_name = "e";
    f.anchor = "(5k-3e+3)/8";
    f.factors = {{R(1, 2), R(0), 1, 2}, {R(3, 4), R(0), 1, 1}, {R(0), R(1), 1, 1},
                 {R(1), R(-1), 1, 1}, {R(1), R(0), 1, -1}, {R(1), R(0), 2, -1},
                 {R(3, 2), R(-1), 1, -1}, {R(7, 4), R(-1), 1, -1}};
    f.z = R(-1);
    f.weight = RationalFunction(Poly::linear(R(3, 8), R(5, 8), R(-3, 8)));
    f.rhs_gammas = {{R(3, 2), R(-1), 1}, {R(7, 4), R(-1), 1},
                    {R(1), R(-1), -1}, {R(5, 4), R(-1), -1}};
    f.rhs_const = (ClosedForm::gamma(R(1, 4)) * inv_sqrt_pi() / ClosedForm::gamma(R(3, 4)))
                      .scaled(R(1, 4));
    f.domain_lo = R(0);
    f.domain_hi = R(1);
    f.test_points = {R(1, 2), R(2, 3), R(3, 4)};
    v.push_back(std::move(f));
  }
  {
    ParamFamily f;
    f.id = "th6.1";
    f.param_name = "b";
    f.anchor =
        "(120k^4+154k^3-(48b^2-48b-55)k^2-(22b^2-22b-6)k-3b^2+3b)/"
        "(2(4k-2b+3)(4k+2b+1))";
    f.factors = {{R(1, 2), R(0), 2, 1}, {R(1, 2), R(0), 1, 2}, {R(0), R(1), 1, 2},
                 {R(1), R(-1), 1, 2}, {R(1), R(0), 1, -2}, {R(1), R(0), 2, -1},
                 {R(3, 2), R(-1), 2, -1}, {R(1, 2), R(1), 2, -1}};
    f.z = R(1);
    f.weight = RationalFunction(
        bipoly({{4, 0, 120}, {3, 0, 154}, {2, 0, 55}, {2, 1, 48}, {2, 2, -48},
                {1, 0, 6}, {1, 1, 22}, {1, 2, -22}, {0, 1, 3}, {0, 2, -3}}),
        Poly::linear(R(3), R(4), R(-2)) * Poly::linear(R(1), R(4), R(2)) * R(2));
    f.rhs_gammas = {{R(3, 2), R(-1), 1}, {R(1, 2), R(1), 1},
                    {R(0), R(1), -1}, {R(1), R(-1), -1}};
    f.rhs_const = ClosedForm::integer(1) / ClosedForm::pi();
    f.domain_lo = R(0);
    f.domain_hi = R(1);
    f.test_points = {R(1, 3), R(2, 5), R(1, 2)};
    v.push_back(std::move(f));
  }
  {
    ParamFamily f;
    f.id = "th6.11";
    f.param_name = "c";
    f.anchor =
        "(60k^5+107k^4+(8c^2-8c+74)k^3+(6c^2-6c+24)k^2-(4c^4-8c^3+6c^2-2c-3)k"
        "-c^4+2c^3-2c^2+c)/(2(2k+1)^3)";
    f.factors = {{R(1, 2), R(0), 2, 1}, {R(0), R(1), 1, 3}, {R(1), R(-1), 1, 3},
                 {R(1), R(0), 2, -3}, {R(3, 2), R(-1), 1, -1}, {R(1, 2), R(1), 1, -1}};
    f.z = R(1);
    f.weight = RationalFunction(
        bipoly({{5, 0, 60}, {4, 0, 107}, {3, 0, 74}, {3, 1, -8}, {3, 2, 8},
                {2, 0, 24}, {2, 1, -6}, {2, 2, 6}, {1, 0, 3}, {1, 1, 2},
                {1, 2, -6}, {1, 3, 8}, {1, 4, -4},
                {0, 1, 1}, {0, 2, -2}, {0, 3, 2}, {0, 4, -1}}),
        Poly::linear(R(1), R(2), R(0)) * Poly::linear(R(1), R(2), R(0)) *
            Poly::linear(R(1), R(2), R(0)) * R(2));
    f.rhs_gammas = {{R(3, 2), R(-1), 1}, {R(1, 2), R(1), 1},
                    {R(0), R(1), -1}, {R(1), R(-1), -1}};
    f.rhs_const = ClosedForm::integer(1) / ClosedForm::pi();
    f.domain_lo = R(0);
    f.domain_hi = R(1);
    f.test_points = {R(1, 3), R(2, 5), R(1, 2)};
    v.push_back(std::move(f));
  }
  return v;
}

std::vector<Specialization> build_specializations() {
  return {
      {"th1", R(1, 2), false, "ra1", R(1)},
      {"th1", R(1, 2), true, "thm-(5)", R(2)},
      {"1c2", R(1, 2), false, "ra2", R(1, 4)},
      {"1c2", R(1, 2), true, "thm-(1)", R(1, 4)},
      {"2b2", R(1, 2), false, "ra2", R(1, 4)},
      {"2b2", R(1, 2), true, "aux-(2b4)", R(-1, 4)},
      {"3b1", R(1, 2), false, "ra3", R(1, 32)},
      {"3b1", R(1, 2), true, "aux-(3b3)", R(1, 32)},
      {"4c1", R(1, 2), false, "ra3", R(1, 32)},
      {"4c1", R(1, 2), true, "aux-(4c3)", R(1, 16)},
      {"5d1", R(1, 4), false, "ra3", R(1, 32)},
      {"5d1", R(1, 4), true, "aux-(5d3)", R(1, 32)},
      {"6e1", R(3, 4), false, "ra3", R(1, 32)},
      {"6e1", R(3, 4), true, "aux-(6e3)", R(1, 32)},
  };
}

}  // namespace

const std::vector<IdentityRecord>& catalog_records() {
  static const std::vector<IdentityRecord> v = build_records();
  return v;
}

const IdentityRecord& catalog_record(const std::string& id) {
  for (const auto& r : catalog_records())
    if (r.id == id) return r;
  throw DomainError("unknown identity id: " + id);
}

const std::vector<ParamFamily>& catalog_families() {
  static const std::vector<ParamFamily> v = build_families();
  return v;
}

const ParamFamily& catalog_family(const std::string& id) {
  for (const auto& f : catalog_families())
    if (f.id == id) return f;
  throw DomainError("unknown family id: " + id);
}

const std::vector<Specialization>& catalog_specializations() {
  static const std::vector<Specialization> v = build_specializations();
  return v;
}

namespace {

void check_domain(const ParamFamily& f, const Rational& p0) {
  if (!(p0 > f.domain_lo && p0 < f.domain_hi))
    throw DomainError("family " + f.id + " needs " + f.param_name + " in (" +
                      f.domain_lo.to_string() + ", " + f.domain_hi.to_string() +
                      "), got " + p0.to_string());
}

}  // namespace

SeriesSpec family_series(const ParamFamily& f, const Rational& p0) {
  check_domain(f, p0);
  std::vector<PochFactor> fs;
  fs.reserve(f.factors.size());
  for (const auto& pf : f.factors)
    fs.push_back({pf.alpha0 + pf.slope * p0, pf.mult, pf.expnt});
  SeriesSpec s;
  s.start = 0;
  s.ratio = pochhammer_ratio(fs, f.z);
  s.t0 = Rational(1);
  s.weight = WeightExpr::from_rf(f.weight.substitute_p(p0));
  return s;
}

ClosedForm family_rhs(const ParamFamily& f, const Rational& p0) {
  check_domain(f, p0);
  ClosedForm r = f.rhs_const;
  for (const auto& g : f.rhs_gammas) {
    ClosedForm gf = ClosedForm::gamma(g.a0 + g.slope * p0);
    for (int e = 0; e < g.expnt; ++e) r = r * gf;
    for (int e = 0; e > g.expnt; --e) r = r / gf;
  }
  return r;
}

SeriesSpec family_derivative_series(const ParamFamily& f, const Rational& p0) {
  SeriesSpec s = family_series(f, p0);
  RationalFunction w0 = f.weight.substitute_p(p0);
  WeightExpr w;
  w.base = f.weight.derivative_p().substitute_p(p0);
  for (const auto& pf : f.factors) {
    if (pf.slope.is_zero()) continue;
    Rational alpha = pf.alpha0 + pf.slope * p0;
    w.harmonic.push_back({HarmonicKey{1, pf.mult, alpha - Rational(1)},
                          w0 * (Rational(pf.expnt) * pf.slope)});
  }
  s.weight = std::move(w);
  return s;
}

ClosedForm family_derivative_rhs(const ParamFamily& f, const Rational& p0) {
  check_domain(f, p0);
  ClosedForm factor;
  for (const auto& g : f.rhs_gammas) {
    if (g.slope.is_zero()) continue;
    ClosedForm term = ClosedForm::digamma(g.a0 + g.slope * p0)
                          .scaled(Rational(g.expnt) * g.slope);
    factor = factor + term;
  }
  return family_rhs(f, p0) * factor;
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

VerifyReport report_from(const std::string& id, const std::string& anchor,
                         const SeriesSpec& spec, const ClosedForm& rhs, int digits) {
  auto t0 = std::chrono::steady_clock::now();
  PrecisionContext ctx(digits);
  SumResult lhs = sum_series(spec, ctx);
  BigReal rhs_v = rhs.eval(ctx);
  VerifyReport r;
  r.id = id;
  r.anchor = anchor;
  r.digits_requested = digits;
  r.digits_matched = agree_digits(lhs.value, rhs_v, digits + 10);
  r.lhs = lhs.value.to_decimal(digits + 5);
  r.rhs = rhs_v.to_decimal(digits + 5);
  r.terms = lhs.terms;
  r.method = lhs.method;
  r.pass = r.digits_matched >= digits;
  r.ms = elapsed_ms(t0);
  return r;
}

}  // namespace

VerifyReport verify_record(const IdentityRecord& rec, int digits) {
  return report_from(rec.id, rec.anchor, rec.series, rec.rhs, digits);
}

VerifyReport verify_record(const std::string& id, int digits) {
  return verify_record(catalog_record(id), digits);
}

VerifyReport verify_family_point(const ParamFamily& f, const Rational& p0, int digits) {
  return report_from(f.id + "(" + f.param_name + "=" + p0.to_string() + ")", f.anchor,
                     family_series(f, p0), family_rhs(f, p0), digits);
}

VerifyReport verify_family_derivative_point(const ParamFamily& f, const Rational& p0,
                                            int digits) {
  return report_from("d/d" + f.param_name + " " + f.id + "(" + f.param_name + "=" +
                         p0.to_string() + ")",
                     f.anchor, family_derivative_series(f, p0),
                     family_derivative_rhs(f, p0), digits);
}

CentralDiffReport central_difference_check(const ParamFamily& f, const Rational& p0) {
  PrecisionContext ctx(60);
  const Rational h = Rational(1, 10).pow_int(10);
  BigReal plus = sum_series(family_series(f, p0 + h), ctx).value;
  BigReal minus = sum_series(family_series(f, p0 - h), ctx).value;
  BigReal numeric = (plus - minus) / BigReal::from_rational(h * Rational(2), ctx.working_bits);
  BigReal analytic = sum_series(family_derivative_series(f, p0), ctx).value;
  CentralDiffReport r;
  r.id = f.id;
  r.at = p0;
  r.agree = agree_digits(numeric, analytic, 30);
  r.numeric = numeric.to_decimal(22);
  r.analytic = analytic.to_decimal(22);
  r.pass = r.agree >= 15;
  return r;
}

namespace {

Poly plin(const Rational& c0, const Rational& ck) { return Poly::linear(c0, ck, Rational(0)); }

// Common slow side of the two contiguous-relation checks:
// sum (a+2k) (b)_k(c)_k(d)_k(e)_k / ((1+a-b)_k(1+a-c)_k(1+a-d)_k(1+a-e)_k).
SlowSeries chu_rhs_series(const TransformTuple& t) {
  SlowSeries s;
  s.poly = RationalFunction(plin(t.a, Rational(2)));
  Rational one(1);
  s.pochs = {{t.b, 1},
             {t.c, 1},
             {t.d, 1},
             {t.e, 1},
             {one + t.a - t.b, -1},
             {one + t.a - t.c, -1},
             {one + t.a - t.d, -1},
             {one + t.a - t.e, -1}};
  return s;
}

VerifyReport transform_report(const std::string& id, const BigReal& lhs, const BigReal& rhs,
                              long terms, const std::string& method, int digits,
                              std::chrono::steady_clock::time_point t0) {
  VerifyReport r;
  r.id = id;
  r.anchor = "two printed sides summed independently";
  r.digits_requested = digits;
  r.digits_matched = agree_digits(lhs, rhs, digits + 10);
  r.lhs = lhs.to_decimal(digits + 5);
  r.rhs = rhs.to_decimal(digits + 5);
  r.terms = terms;
  r.method = method;
  r.pass = r.digits_matched >= digits;
  r.ms = elapsed_ms(t0);
  return r;
}

}  // namespace

VerifyReport verify_transformation(const std::string& kind, const TransformTuple& t,
                                   int digits) {
  auto t0 = std::chrono::steady_clock::now();
  PrecisionContext ctx(digits);
  const Rational one(1);

  if (kind == "dougall") {
    Rational margin = one + t.a - t.b - t.c - t.d;
    if (!(margin > Rational(0)))
      throw DomainError("dougall needs Re(1+a-b-c-d) > 0, got " + margin.to_string());
    SlowSeries lhs;
    lhs.poly = RationalFunction(one);
    lhs.pochs = {{t.a, 1},
                 {one + t.a / Rational(2), 1},
                 {t.b, 1},
                 {t.c, 1},
                 {t.d, 1},
                 {one, -1},
                 {t.a / Rational(2), -1},
                 {one + t.a - t.b, -1},
                 {one + t.a - t.c, -1},
                 {one + t.a - t.d, -1}};
    SlowSumResult ls = sum_slow(lhs, ctx);
    ClosedForm rhs = ClosedForm::gamma(one + t.a - t.b) * ClosedForm::gamma(one + t.a - t.c) *
                     ClosedForm::gamma(one + t.a - t.d) *
                     ClosedForm::gamma(one + t.a - t.b - t.c - t.d) /
                     (ClosedForm::gamma(one + t.a) * ClosedForm::gamma(one + t.a - t.b - t.c) *
                      ClosedForm::gamma(one + t.a - t.b - t.d) *
                      ClosedForm::gamma(one + t.a - t.c - t.d));
    return transform_report("dougall", ls.value, rhs.eval(ctx), ls.head_terms, ls.method,
                            digits, t0);
  }

  Rational cond = one + t.a * Rational(2) - t.b - t.c - t.d - t.e;
  if (!(cond > Rational(0)))
    throw DomainError(kind + " needs Re(1+2a-b-c-d-e) > 0, got " + cond.to_string());
  SlowSeries rhs_series = chu_rhs_series(t);
  SlowSumResult rs = sum_slow(rhs_series, ctx);

  if (kind == "chu") {
    std::vector<PochFactor> fs = {{t.c, 1, 1},
                                  {t.d, 1, 1},
                                  {t.e, 1, 1},
                                  {one + t.a - t.b - t.c, 1, 1},
                                  {one + t.a - t.b - t.d, 1, 1},
                                  {one + t.a - t.b - t.e, 1, 1},
                                  {one + t.a - t.c, 1, -1},
                                  {one + t.a - t.d, 1, -1},
                                  {one + t.a - t.e, 1, -1},
                                  {cond, 1, -1},
                                  {one + t.a - t.b, 2, -1}};
    // alpha_k = (A+2k)(a-e+k)/(E+k) + (e+k)(B1+k)(B2+k)/((H+2k)(E+k))
    Rational A = one + t.a * Rational(2) - t.b - t.c - t.d;
    Rational E = cond;
    Rational H = one + t.a - t.b;
    Rational B1 = one + t.a - t.b - t.c;
    Rational B2 = one + t.a - t.b - t.d;
    RationalFunction term1(plin(A, Rational(2)) * plin(t.a - t.e, one), plin(E, one));
    RationalFunction term2(plin(t.e, one) * plin(B1, one) * plin(B2, one),
                           plin(H, Rational(2)) * plin(E, one));
    SeriesSpec lhs;
    lhs.start = 0;
    lhs.ratio = pochhammer_ratio(fs, Rational(-1));
    lhs.t0 = Rational(1);
    lhs.weight = WeightExpr::from_rf(term1 + term2);
    SumResult ls = sum_series(lhs, ctx);
    return transform_report("chu", ls.value, rs.value, ls.terms,
                            ls.method + "+" + rs.method, digits, t0);
  }

  if (kind == "chu14") {
    std::vector<PochFactor> fs = {{t.c, 1, 1},
                                  {t.e, 1, 1},
                                  {one + t.a - t.b - t.c, 1, 1},
                                  {one + t.a - t.b - t.e, 1, 1},
                                  {one + t.a - t.c - t.d, 1, 1},
                                  {one + t.a - t.d - t.e, 1, 1},
                                  {one + t.a - t.b - t.d, 2, 1},
                                  {one + t.a - t.b, 2, -1},
                                  {one + t.a - t.d, 2, -1},
                                  {cond, 2, -1},
                                  {one + t.a - t.c, 1, -1},
                                  {one + t.a - t.e, 1, -1}};
    Rational A = one + t.a * Rational(2) - t.b - t.c - t.d;
    Rational E = cond;
    // delta_k = (A+3k)(a-e+k)/(E+2k)
    //   + (e+k)(A2+3k)(B1+k)(B2+2k)(B3+k)/((H1+2k)(H2+2k)(E+2k)(E+1+2k))
    Rational A2 = Rational(2) + t.a * Rational(2) - t.b - t.d - t.e;
    Rational B1 = one + t.a - t.b - t.c;
    Rational B2 = one + t.a - t.b - t.d;
    Rational B3 = one + t.a - t.c - t.d;
    Rational H1 = one + t.a - t.b;
    Rational H2 = one + t.a - t.d;
    RationalFunction term1(plin(A, Rational(3)) * plin(t.a - t.e, one),
                           plin(E, Rational(2)));
    RationalFunction term2(
        plin(t.e, one) * plin(A2, Rational(3)) * plin(B1, one) * plin(B2, Rational(2)) *
            plin(B3, one),
        plin(H1, Rational(2)) * plin(H2, Rational(2)) * plin(E, Rational(2)) *
            plin(E + one, Rational(2)));
    SeriesSpec lhs;
    lhs.start = 0;
    lhs.ratio = pochhammer_ratio(fs, Rational(1));
    lhs.t0 = Rational(1);
    lhs.weight = WeightExpr::from_rf(term1 + term2);
    SumResult ls = sum_series(lhs, ctx);
    return transform_report("chu14", ls.value, rs.value, ls.terms,
                            ls.method + "+" + rs.method, digits, t0);
  }

  throw DomainError("unknown transformation kind: " + kind +
                    " (expected dougall, chu, or chu14)");
}

std::vector<CombinationReport> combination_checks(int digits, long term_limit) {
  std::vector<CombinationReport> out;
  PrecisionContext ctx(digits);

  auto sum_of = [&](const char* id) { return sum_series(catalog_record(id).series, ctx).value; };

  {
    // (4c3) - (3b3) - (5d3) - (6e3) = thm-(3) + 4 ra3, term by term and in value.
    CombinationReport r;
    r.id = "aux-collapse";
    SeriesTerms t4(catalog_record("aux-(4c3)").series), t3(catalog_record("aux-(3b3)").series),
        t5(catalog_record("aux-(5d3)").series), t6(catalog_record("aux-(6e3)").series),
        tt(catalog_record("thm-(3)").series), tr(catalog_record("ra3").series);
    r.term_level_pass = true;
    for (long k = 0; k <= term_limit; ++k) {
      Rational lhs = t4.value() - t3.value() - t5.value() - t6.value();
      Rational rhs = tt.value() + Rational(4) * tr.value();
      if (lhs != rhs) {
        r.term_level_pass = false;
        break;
      }
      t4.advance(), t3.advance(), t5.advance(), t6.advance(), tt.advance(), tr.advance();
      r.terms_checked = k + 1;
    }
    BigReal lhs = sum_of("aux-(4c3)") - sum_of("aux-(3b3)") - sum_of("aux-(5d3)") -
                  sum_of("aux-(6e3)");
    BigReal rhs = sum_of("thm-(3)") + sum_of("ra3") * Rational(4);
    r.digits_matched = agree_digits(lhs, rhs, digits + 10);
    r.pass = r.term_level_pass && r.digits_matched >= digits;
    out.push_back(r);
  }
  {
    // 8 (th6.4) + 3 (th6.33) = 4 * quadratic-harmonic summand, value 352/3.
    CombinationReport r;
    r.id = "quadratic-channel";
    SeriesTerms ta(catalog_record("aux-(th6.4)").series),
        tb(catalog_record("aux-(th6.33)").series), th(catalog_record("thm-(2H)").series);
    r.term_level_pass =
        Rational(8) * ta.value() + Rational(3) * tb.value() == Rational(96);
    ta.advance(), tb.advance();
    for (long k = 1; k <= term_limit && r.term_level_pass; ++k) {
      Rational lhs = Rational(8) * ta.value() + Rational(3) * tb.value();
      Rational rhs = Rational(4) * th.value();
      if (lhs != rhs) {
        r.term_level_pass = false;
        break;
      }
      ta.advance(), tb.advance(), th.advance();
      r.terms_checked = k + 1;
    }
    BigReal lhs = sum_of("aux-(th6.4)") * Rational(8) + sum_of("aux-(th6.33)") * Rational(3);
    BigReal rhs = BigReal::from_rational(Rational(352, 3), ctx.working_bits);
    r.digits_matched = agree_digits(lhs, rhs, digits + 10);
    r.pass = r.term_level_pass && r.digits_matched >= digits;
    out.push_back(r);
  }
  {
    // thm-(2) - thm-(1) = gid1.
    CombinationReport r;
    r.id = "gid1-difference";
    SeriesTerms t2(catalog_record("thm-(2)").series), t1(catalog_record("thm-(1)").series),
        tg(catalog_record("gid1").series);
    r.term_level_pass = true;
    for (long k = 0; k <= term_limit; ++k) {
      if (t2.value() - t1.value() != tg.value()) {
        r.term_level_pass = false;
        break;
      }
      t2.advance(), t1.advance(), tg.advance();
      r.terms_checked = k + 1;
    }
    BigReal lhs = sum_of("thm-(2)") - sum_of("thm-(1)");
    BigReal rhs = sum_of("gid1");
    r.digits_matched = agree_digits(lhs, rhs, digits + 10);
    r.pass = r.term_level_pass && r.digits_matched >= digits;
    out.push_back(r);
  }
  return out;
}

}  // namespace piharmonic
