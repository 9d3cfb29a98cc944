#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "piharmonic/catalog.hpp"
#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"

using namespace piharmonic;

namespace {

BigReal cf_val(const ClosedForm& cf, int digits) {
  return cf.eval(PrecisionContext(digits));
}

}  // namespace

TEST_CASE("catalog inventory") {
  const auto& recs = catalog_records();
  CHECK(recs.size() == 21);
  std::set<std::string> ids;
  for (const auto& r : recs) ids.insert(r.id);
  CHECK(ids.size() == recs.size());
  CHECK(catalog_families().size() == 9);
  CHECK(catalog_specializations().size() == 14);
  CHECK_THROWS_AS(catalog_record("nope"), DomainError);
  CHECK_THROWS_AS(catalog_family("nope"), DomainError);
}

TEST_CASE("pinned exact terms") {
  auto t = [](const char* id, long k) { return term_at(catalog_record(id).series, k); };
  CHECK(t("ra3", 0).first == Rational(3));
  CHECK(t("ra3", 1).first == Rational(-69, 128));
  CHECK(t("ra2", 1).first == Rational(7, 32));
  CHECK(t("thm-(5)", 0).first == Rational(0));
  CHECK(t("guillera32", 0).first == Rational(-2));
  CHECK(t("wei", 0).first == Rational(9));
  CHECK(t("aux-(th6.4)", 0).first == Rational(9));
  CHECK(t("aux-(th6.33)", 0).first == Rational(8));
  CHECK(t("thm-(2H)", 1).first == Rational(41265, 8192));
  // no record uses the explicit log 2 channel
  for (const auto& r : catalog_records()) CHECK_FALSE(r.series.weight.has_log2());
}

TEST_CASE("direct records reach 50 digits") {
  for (const char* id : {"ra2", "ra3", "ra4", "thm-(1)", "thm-(3)", "thm-(2H)", "wei"}) {
    CAPTURE(id);
    VerifyReport r = verify_record(id, 50);
    CHECK(r.pass);
    CHECK(r.digits_matched >= 50);
    CHECK(r.method == "direct");
    CHECK(r.terms < 800);
  }
}

TEST_CASE("alternating borderline records accelerate") {
  for (const char* id : {"ra1", "thm-(5)", "guillera32"}) {
    CAPTURE(id);
    VerifyReport r = verify_record(id, 26);
    CHECK(r.pass);
    CHECK(r.method == "accelerated");
    CHECK(catalog_record(id).alternating_slow);
  }
}

TEST_CASE("digamma right-hand sides reduce to log 2 forms") {
  PrecisionContext ctx(45);
  auto close = [&](const ClosedForm& a, const ClosedForm& b) {
    return agree_digits(a.eval(ctx), b.eval(ctx), 60) >= 44;
  };
  ClosedForm l2pi = ClosedForm::log2() / ClosedForm::pi();
  CHECK(close(catalog_record("aux-(3b3)").rhs, l2pi.scaled(Rational(-48))));
  CHECK(close(catalog_record("aux-(4c3)").rhs, l2pi.scaled(Rational(-24))));
  CHECK(close(catalog_record("aux-(5d3)").rhs,
              ClosedForm::integer(8) - (ClosedForm::integer(32) / ClosedForm::pi()) -
                  l2pi.scaled(Rational(16))));
  CHECK(close(catalog_record("aux-(6e3)").rhs,
              -ClosedForm::integer(8) - l2pi.scaled(Rational(16))));
  VerifyReport r = verify_record("aux-(3b3)", 40);
  CHECK(r.pass);
}

TEST_CASE("family midpoint right-hand sides") {
  PrecisionContext ctx(40);
  BigReal pi = const_pi(ctx);
  BigReal two_over_pi = BigReal::from_long(2, ctx.working_bits) / pi;
  CHECK(agree_digits(family_rhs(catalog_family("th1"), Rational(1, 2)).eval(ctx),
                     two_over_pi, 50) >= 38);
  BigReal inv4pi = BigReal::from_rational(Rational(1, 4), ctx.working_bits) / pi;
  CHECK(agree_digits(family_rhs(catalog_family("3b1"), Rational(1, 2)).eval(ctx), inv4pi,
                     50) >= 38);
  CHECK(agree_digits(family_rhs(catalog_family("6e1"), Rational(3, 4)).eval(ctx), inv4pi,
                     50) >= 38);
  BigReal inv_pi2 = BigReal::from_long(1, ctx.working_bits) / (pi * pi);
  CHECK(agree_digits(family_rhs(catalog_family("th6.1"), Rational(1, 2)).eval(ctx),
                     inv_pi2, 50) >= 38);
  CHECK(agree_digits(family_rhs(catalog_family("th6.11"), Rational(1, 2)).eval(ctx),
                     inv_pi2, 50) >= 38);
}

TEST_CASE("specializations hold term by term") {
  for (const auto& s : catalog_specializations()) {
    CAPTURE(s.family_id);
    CAPTURE(s.derivative);
    const ParamFamily& f = catalog_family(s.family_id);
    SeriesSpec fam =
        s.derivative ? family_derivative_series(f, s.at) : family_series(f, s.at);
    const SeriesSpec& fixed = catalog_record(s.fixed_id).series;
    REQUIRE(fixed.start == 0);
    SeriesTerms ft(fam), xt(fixed);
    for (long k = 0; k <= 60; ++k) {
      CHECK(ft.value() == xt.value() * s.scale);
      CHECK(ft.log2_coef().is_zero());
      CHECK(xt.log2_coef().is_zero());
      ft.advance();
      xt.advance();
    }
  }
}

TEST_CASE("derivative right-hand sides at documented points") {
  PrecisionContext ctx(40);
  // d/dc th1 at 1/2 doubles the (4k+1)H_{2k} value, so -4 log2 / pi.
  BigReal want = (const_log2(ctx) / const_pi(ctx)) * Rational(-4);
  CHECK(agree_digits(family_derivative_rhs(catalog_family("th1"), Rational(1, 2)).eval(ctx),
                     want, 50) >= 38);
  // d/db 2b2 at 1/2 is -(1/4) times the 8 log2 / pi record.
  BigReal want2 = (const_log2(ctx) / const_pi(ctx)) * Rational(-2);
  CHECK(agree_digits(family_derivative_rhs(catalog_family("2b2"), Rational(1, 2)).eval(ctx),
                     want2, 50) >= 38);
}

TEST_CASE("family points verify numerically") {
  const ParamFamily& f2 = catalog_family("2b2");
  for (const auto& p : f2.test_points) {
    CAPTURE(p.to_string());
    VerifyReport r = verify_family_point(f2, p, 35);
    CHECK(r.pass);
    CHECK(r.method == "direct");
  }
  VerifyReport alt = verify_family_point(catalog_family("th1"), Rational(1, 3), 25);
  CHECK(alt.pass);
  CHECK(alt.method == "accelerated");
  VerifyReport q = verify_family_point(catalog_family("th6.11"), Rational(2, 5), 30);
  CHECK(q.pass);
  VerifyReport d1 = verify_family_derivative_point(catalog_family("1c2"), Rational(1, 3), 30);
  CHECK(d1.pass);
  VerifyReport d2 = verify_family_derivative_point(catalog_family("3b1"), Rational(1, 2), 35);
  CHECK(d2.pass);
  CHECK(d1.id == "d/dc 1c2(c=1/3)");
}

TEST_CASE("weight derivative pin") {
  RationalFunction dh = catalog_family("4c1").weight.derivative_p().substitute_p(Rational(1, 2));
  CHECK(dh.eval_k(Rational(1)) == Rational(-17, 48));
}

TEST_CASE("derivative weight cancels at the symmetric point") {
  SeriesSpec d = family_derivative_series(catalog_family("th6.1"), Rational(1, 2));
  SeriesTerms t(d);
  for (long k = 0; k <= 20; ++k) {
    CHECK(t.value().is_zero());
    t.advance();
  }
  PrecisionContext ctx(30);
  CHECK(family_derivative_rhs(catalog_family("th6.1"), Rational(1, 2)).eval(ctx).is_zero());
}

TEST_CASE("quartic and quintic weights agree at the midpoint") {
  SeriesSpec a = family_series(catalog_family("th6.1"), Rational(1, 2));
  SeriesSpec b = family_series(catalog_family("th6.11"), Rational(1, 2));
  SeriesTerms ta(a), tb(b);
  for (long k = 0; k <= 40; ++k) {
    CHECK(ta.value() == tb.value());
    ta.advance();
    tb.advance();
  }
}

TEST_CASE("central difference matches assembled derivative") {
  CentralDiffReport r = central_difference_check(catalog_family("1c2"), Rational(1, 2));
  CAPTURE(r.numeric);
  CAPTURE(r.analytic);
  CHECK(r.pass);
  CHECK(r.agree >= 15);
}

TEST_CASE("classical transformation checks") {
  TransformTuple chu{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2),
                     Rational(1, 3)};
  VerifyReport r1 = verify_transformation("chu", chu, 30);
  CAPTURE(r1.lhs);
  CAPTURE(r1.rhs);
  CHECK(r1.pass);
  VerifyReport r2 = verify_transformation("chu14", chu, 30);
  CHECK(r2.pass);
  TransformTuple dg{Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 3),
                    Rational(0)};
  VerifyReport r3 = verify_transformation("dougall", dg, 30);
  CHECK(r3.pass);
  TransformTuple bad{Rational(1, 2), Rational(1), Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(verify_transformation("chu", bad, 20), DomainError);
  CHECK_THROWS_AS(verify_transformation("dougall", bad, 20), DomainError);
  CHECK_THROWS_AS(verify_transformation("zeilberger", chu, 20), DomainError);
}

TEST_CASE("combination checks") {
  auto reports = combination_checks(40, 200);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.term_level_pass);
    CHECK(r.terms_checked >= 200);
    CHECK(r.digits_matched >= 40);
    CHECK(r.pass);
  }
  // full quadratic-harmonic sum from k = 0 is 24 + 16/3 = 88/3
  SeriesSpec from0 = catalog_record("thm-(2H)").series;
  from0.start = 0;
  from0.t0 = Rational(1);
  PrecisionContext ctx(35);
  BigReal s = sum_series(from0, ctx).value;
  CHECK(agree_digits(s, BigReal::from_rational(Rational(88, 3), ctx.working_bits), 45) >= 34);
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(family_series(catalog_family("th1"), Rational(7, 8)), DomainError);
  CHECK_THROWS_AS(family_series(catalog_family("th1"), Rational(0)), DomainError);
  CHECK_THROWS_AS(family_series(catalog_family("5d1"), Rational(3, 4)), DomainError);
}

TEST_CASE("perturbed weight fails verification") {
  IdentityRecord rec = catalog_record("ra2");
  rec.series.weight.base = rec.series.weight.base + RationalFunction(Rational(1));
  VerifyReport r = verify_record(rec, 40);
  CHECK_FALSE(r.pass);
  CHECK(r.digits_matched < 5);
}
