#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "piharmonic/catalog.hpp"
#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"
#include "piharmonic/wz.hpp"

using namespace piharmonic;

TEST_CASE("pinned pair values") {
  CHECK(wz_G(0, 0) == Rational(3));
  CHECK(wz_G(1, 0) == Rational(-69, 128));
  CHECK(wz_F(1, 0) == Rational(-1, 2));
  CHECK(wz_F(0, 5) == Rational(0));
  CHECK(wz_F(0, 0) == Rational(0));
  CHECK(wz_H(0, 0) == Rational(5, 2));
  // hand value: G(0,1) = 5 * (-1) * coef(-1) * coef(1)^2 = 5*(-1)*(-2)*(1/4)
  CHECK(wz_G(0, 1) == Rational(5, 2));
}

TEST_CASE("pair relation sweep") {
  PairSweepReport r = wz_pair_sweep(30, 30);
  CHECK(r.pass);
  CHECK(r.checked == 31 * 31);
}

TEST_CASE("perturbed row polynomial breaks the relation") {
  PairSweepReport r = wz_pair_sweep(10, 10, true);
  CHECK_FALSE(r.pass);
  CHECK(r.detail.find("fails at") != std::string::npos);
}

TEST_CASE("first column equals the (20k+3) record") {
  CHECK(wz_bridge_check(50));
}

TEST_CASE("row sums are 8/pi at small integer k") {
  PrecisionContext ctx(40);
  BigReal want = BigReal::from_long(8, ctx.working_bits) / const_pi(ctx);
  for (long k = 0; k <= 3; ++k) {
    CAPTURE(k);
    SumResult s = wz_sum_G(Rational(k), ctx);
    CHECK(agree_digits(s.value, want, 50) >= 40);
  }
}

TEST_CASE("gamma continuation matches exact values and moves continuously") {
  PrecisionContext ctx(30);
  BigReal exact = BigReal::from_rational(wz_G(2, 0), ctx.working_bits);
  CHECK(agree_digits(wz_G_real(2, Rational(0), ctx), exact, 40) >= 28);
  BigReal nearby = wz_G_real(1, Rational(1, 1000), ctx);
  BigReal at0 = BigReal::from_rational(wz_G(1, 0), ctx.working_bits);
  CHECK(agree_digits(nearby, at0, 40) >= 2);
  CHECK_THROWS_AS(wz_G_real(1, Rational(3, 4), ctx), DomainError);
}

TEST_CASE("diagonal sum is 8/pi") {
  PrecisionContext ctx(40);
  BigReal want = BigReal::from_long(8, ctx.working_bits) / const_pi(ctx);
  SumResult s = wz_sum_H(0, ctx);
  CHECK(agree_digits(s.value, want, 50) >= 40);
  CHECK(s.terms < 120);
}

TEST_CASE("row sum has zero derivative in k") {
  DdkReport r = wz_ddk_check();
  CAPTURE(r.value);
  CHECK(r.pass);
  CHECK(r.zero_digits >= 15);
}

TEST_CASE("telescoped corollaries vanish with exact channels") {
  auto reports = wz_zero_series(40, 200);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.term_level_pass);
    CHECK(r.terms_checked >= 200);
    CHECK(r.zero_digits >= 40);
    CHECK(r.pass);
  }
}
