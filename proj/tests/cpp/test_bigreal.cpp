#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include "piharmonic/bigreal.hpp"
#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"

using piharmonic::BigReal;
using piharmonic::PrecisionContext;
using piharmonic::Rational;

TEST_CASE("precision context derives working bits") {
    PrecisionContext ctx(50);
    CHECK(ctx.target_digits == 50);
    CHECK(ctx.working_bits == 231);  // ceil(50*log2(10)) + 64
    CHECK_THROWS_AS(PrecisionContext(0), piharmonic::DomainError);
}

TEST_CASE("arithmetic round trips") {
    const long wb = 256;
    BigReal a = BigReal::from_rational(Rational(1, 3), wb);
    BigReal b = BigReal::from_rational(Rational(1, 6), wb);
    BigReal half = BigReal::from_rational(Rational(1, 2), wb);
    CHECK(piharmonic::agree_digits(a + b, half) >= 70);
    BigReal two = BigReal::from_long(2, wb);
    BigReal r = two.sqrt();
    CHECK(piharmonic::agree_digits(r * r, two) >= 70);
    BigReal e1 = BigReal::from_long(1, wb).exp();
    CHECK(piharmonic::agree_digits(e1.ln(), BigReal::from_long(1, wb)) >= 70);
    CHECK(BigReal::pow2(-3, wb).to_double() == doctest::Approx(0.125));
    CHECK_THROWS_AS(BigReal::from_long(-1, wb).sqrt(), piharmonic::DomainError);
    CHECK_THROWS_AS(BigReal(wb).ln(), piharmonic::DomainError);
    CHECK_THROWS_AS(a / BigReal(wb), piharmonic::DomainError);
}

TEST_CASE("rational powers") {
    const long wb = 256;
    BigReal x = BigReal::from_long(8, wb);
    CHECK(piharmonic::agree_digits(x.pow_rational(Rational(2, 3)), BigReal::from_long(4, wb)) >= 70);
    CHECK(piharmonic::agree_digits(x.pow_rational(Rational(-1)), BigReal::from_rational(Rational(1, 8), wb)) >= 70);
    BigReal t = BigReal::from_long(2, wb).pow_rational(Rational(1, 2));
    CHECK(piharmonic::agree_digits(t, BigReal::from_long(2, wb).sqrt()) >= 70);
}

TEST_CASE("agreement metric") {
    PrecisionContext ctx(50);
    const long wb = ctx.working_bits;
    BigReal pi = piharmonic::const_pi(ctx);
    CHECK(piharmonic::agree_digits(pi, pi, 50) == 50);
    CHECK(piharmonic::agree_digits(pi, -pi, 50) == 0);
    BigReal approx = BigReal::from_rational(Rational(355, 113), wb);
    CHECK(piharmonic::agree_digits(pi, approx, 50) == 7);
    BigReal crude = BigReal::from_rational(Rational(22, 7), wb);
    CHECK(piharmonic::agree_digits(pi, crude, 50) == 3);
}

TEST_CASE("decimal formatting") {
    const long wb = 256;
    BigReal x = BigReal::from_rational(Rational(1, 3), wb);
    std::string s = x.to_decimal(10);
    CHECK(s.substr(0, 3) == "3.3");
    CHECK(s.find('e') != std::string::npos);
}

TEST_CASE("pi three ways to 1000 digits") {
    PrecisionContext ctx(1000);
    BigReal agm = piharmonic::const_pi(ctx);
    BigReal machin = piharmonic::machin_pi(ctx);
    BigReal lib(ctx.working_bits);
    mpfr_const_pi(lib.raw(), MPFR_RNDN);
    CHECK(piharmonic::agree_digits(agm, machin, 1000) >= 1000);
    CHECK(piharmonic::agree_digits(agm, lib, 1000) >= 1000);
}

TEST_CASE("log2 two ways to 1000 digits") {
    PrecisionContext ctx(1000);
    BigReal a = piharmonic::const_log2(ctx);
    BigReal b = piharmonic::atanh_log2(ctx);
    CHECK(piharmonic::agree_digits(a, b, 1000) >= 1000);
}

TEST_CASE("euler gamma against the library value") {
    PrecisionContext ctx(300);
    BigReal own = piharmonic::const_euler_gamma(ctx);
    BigReal lib(ctx.working_bits);
    mpfr_const_euler(lib.raw(), MPFR_RNDN);
    CHECK(piharmonic::agree_digits(own, lib, 300) >= 300);
}

TEST_CASE("cos of rational multiples of pi") {
    PrecisionContext ctx(50);
    const long wb = ctx.working_bits;
    CHECK(piharmonic::cos_pi(Rational(0), ctx) == BigReal::from_long(1, wb));
    CHECK(piharmonic::cos_pi(Rational(1), ctx) == BigReal::from_long(-1, wb));
    CHECK(piharmonic::cos_pi(Rational(7), ctx) == BigReal::from_long(-1, wb));
    CHECK(piharmonic::cos_pi(Rational(1, 2), ctx).is_zero());
    CHECK(piharmonic::cos_pi(Rational(-1, 2), ctx).is_zero());
    CHECK(piharmonic::cos_pi(Rational(123456789, 2), ctx).is_zero());
    CHECK(piharmonic::cos_pi(Rational(1, 3), ctx) == BigReal::from_rational(Rational(1, 2), wb));
    CHECK(piharmonic::cos_pi(Rational(2, 3), ctx) == BigReal::from_rational(Rational(-1, 2), wb));
    // cos(pi/4) = sqrt(1/2).
    BigReal q = piharmonic::cos_pi(Rational(1, 4), ctx);
    BigReal ref = BigReal::from_rational(Rational(1, 2), wb).sqrt();
    CHECK(piharmonic::agree_digits(q, ref, 50) >= 49);
    // Periodicity.
    BigReal u = piharmonic::cos_pi(Rational(1, 7), ctx);
    BigReal v = piharmonic::cos_pi(Rational(15, 7), ctx);
    CHECK(piharmonic::agree_digits(u, v, 50) >= 49);
    BigReal w = piharmonic::cos_pi(Rational(-1, 7), ctx);
    CHECK(piharmonic::agree_digits(u, w, 50) >= 49);
}
