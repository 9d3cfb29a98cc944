#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "piharmonic/errors.hpp"
#include "piharmonic/harmonic.hpp"
#include "piharmonic/ratfunc.hpp"

using piharmonic::HarmonicKey;
using piharmonic::HarmonicState;
using piharmonic::Poly;
using piharmonic::Rational;
using piharmonic::RationalFunction;

TEST_CASE("plain harmonic values") {
    CHECK(piharmonic::harmonic_number(0).is_zero());
    CHECK(piharmonic::harmonic_number(1) == Rational(1));
    CHECK(piharmonic::harmonic_number(2) == Rational(3, 2));
    CHECK(piharmonic::harmonic_number(4) == Rational(25, 12));

    HarmonicState s = HarmonicState::at(2);
    CHECK(s.h() == Rational(3, 2));
    CHECK(s.h_2k() == Rational(25, 12));                 // H_4
    CHECK(s.h_4k() == Rational(761, 280));               // H_8
    CHECK(s.h2() == Rational(5, 4));                     // 1 + 1/4
    CHECK(s.h2_2k() == Rational(205, 144));              // 1 + 1/4 + 1/9 + 1/16
}

TEST_CASE("advance matches direct construction") {
    std::vector<HarmonicKey> extra = {{1, 1, Rational(-1, 2)}, {2, 2, Rational(-3, 4)}};
    HarmonicState s = HarmonicState::at(0, extra);
    for (long k = 1; k <= 12; ++k) {
        s = s.advanced();
        HarmonicState d = HarmonicState::at(k, extra);
        CHECK(s.k() == k);
        CHECK(s.h() == d.h());
        CHECK(s.h_4k() == d.h_4k());
        CHECK(s.h2_2k() == d.h2_2k());
        CHECK(s.value({1, 1, Rational(-1, 2)}) == d.value({1, 1, Rational(-1, 2)}));
        CHECK(s.value({2, 2, Rational(-3, 4)}) == d.value({2, 2, Rational(-3, 4)}));
    }
}

TEST_CASE("unregistered key throws") {
    HarmonicState s = HarmonicState::at(3);
    CHECK_THROWS_AS(s.value({1, 1, Rational(-1, 2)}), piharmonic::DomainError);
}

TEST_CASE("shifted harmonic values and poles") {
    // H_2(-1/2) = 1/(1/2) + 1/(3/2).
    CHECK(piharmonic::shifted_harmonic(Rational(-1, 2), 2) == Rational(8, 3));
    CHECK(piharmonic::shifted_harmonic(Rational(0), 5) == piharmonic::harmonic_number(5));
    CHECK_THROWS_AS(piharmonic::shifted_harmonic(Rational(-2), 5), piharmonic::PoleError);
    CHECK_THROWS_AS(piharmonic::shifted_harmonic2(Rational(-3), 3), piharmonic::PoleError);
    CHECK(piharmonic::shifted_harmonic2(Rational(-1, 2), 1) == Rational(4));
}

TEST_CASE("half shift identity H_k(-1/2) = 2 H_{2k} - H_k") {
    for (long k = 0; k <= 50; ++k) {
        Rational lhs = piharmonic::shifted_harmonic(Rational(-1, 2), k);
        Rational rhs = Rational(2) * piharmonic::harmonic_number(2 * k) - piharmonic::harmonic_number(k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quarter shift identity H_k(-1/4) + H_k(-3/4) = 4 H_{4k} - 2 H_{2k}") {
    for (long k = 0; k <= 50; ++k) {
        Rational lhs = piharmonic::shifted_harmonic(Rational(-1, 4), k) +
                       piharmonic::shifted_harmonic(Rational(-3, 4), k);
        Rational rhs = Rational(4) * piharmonic::harmonic_number(4 * k) -
                       Rational(2) * piharmonic::harmonic_number(2 * k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("polynomial basics") {
    Poly k = Poly::var_k();
    Poly p = Poly::var_p();
    Poly f = k * k + p * Rational(3) + Poly(Rational(1));
    CHECK(f.deg_k() == 2);
    CHECK(f.deg_p() == 1);
    CHECK(f.eval(Rational(2), Rational(1, 3)) == Rational(6));
    CHECK(f.derivative_k().eval(Rational(5), Rational(0)) == Rational(10));
    CHECK(f.derivative_p().eval(Rational(5), Rational(0)) == Rational(3));
    CHECK(f.substitute_p(Rational(1, 3)).eval_k(Rational(2)) == Rational(6));
    Poly lin = Poly::linear(Rational(1), Rational(2), Rational(3));
    CHECK(lin.eval(Rational(10), Rational(100)) == Rational(321));
}

TEST_CASE("rational function arithmetic and derivatives") {
    Poly k = Poly::var_k();
    // r(k) = (k+1)/(2k+3)
    RationalFunction r(k + Poly(Rational(1)), k * Rational(2) + Poly(Rational(3)));
    CHECK(r.eval_k(Rational(1)) == Rational(2, 5));
    // r'(k) = 1/(2k+3)^2
    RationalFunction dr = r.derivative_k();
    CHECK(dr.eval_k(Rational(1)) == Rational(1, 25));
    CHECK(dr.eval_k(Rational(0)) == Rational(1, 9));
    RationalFunction sum = r + dr;
    CHECK(sum.eval_k(Rational(1)) == Rational(2, 5) + Rational(1, 25));
    RationalFunction prod = r * r;
    CHECK(prod.eval_k(Rational(1)) == Rational(4, 25));
    CHECK_THROWS_AS(r.eval_k(Rational(-3, 2)), piharmonic::PoleError);
}

TEST_CASE("named evaluation and parameter derivatives") {
    Poly k = Poly::var_k();
    Poly c = Poly::var_p();
    // (k + c)/(k + 1), parameter named c.
    RationalFunction f(k + c, k + Poly(Rational(1)));
    std::map<std::string, Rational> at = {{"k", Rational(3)}, {"c", Rational(1, 2)}};
    CHECK(piharmonic::rf_eval(f, at, "c") == Rational(7, 8));
    RationalFunction df = piharmonic::rf_derivative(f, "c", "c");
    CHECK(piharmonic::rf_eval(df, at, "c") == Rational(1, 4));
    CHECK_THROWS_AS(piharmonic::rf_eval(f, {{"k", Rational(3)}}, "c"), piharmonic::DomainError);
}

TEST_CASE("descending coefficient extraction") {
    Poly k = Poly::var_k();
    Poly f = k * k * Rational(3) + k * Rational(2) + Poly(Rational(7));
    auto c = f.coeffs_desc_k();
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Rational(3));
    CHECK(c[1] == Rational(2));
    CHECK(c[2] == Rational(7));
}
