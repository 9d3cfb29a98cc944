#include "piharmonic/hyperg.hpp"

#include <cstdlib>

#include "piharmonic/errors.hpp"

namespace piharmonic {

std::string poch_factor_to_string(const PochFactor& f) {
  std::string s = "(" + f.alpha.to_string() + ")_{";
  s += (f.mult == 1) ? "k}" : std::to_string(f.mult) + "k}";
  if (f.expnt != 1) s += "^" + std::to_string(f.expnt);
  return s;
}

void check_poch_factors(const std::vector<PochFactor>& fs) {
  for (const auto& f : fs) {
    if (f.expnt == 0) throw DomainError("factor " + poch_factor_to_string(f) + " has exponent 0");
    if (f.mult != 1 && f.mult != 2)
      throw DomainError("factor " + poch_factor_to_string(f) + " has unsupported index multiple");
    if (f.alpha.is_integer() && f.alpha.sign() <= 0) {
      if (f.expnt < 0)
        throw PoleError("denominator factor " + poch_factor_to_string(f) +
                        " hits a pole: alpha is a nonpositive integer");
      throw DomainError("numerator factor " + poch_factor_to_string(f) +
                        " terminates the series: alpha is a nonpositive integer");
    }
  }
}

RationalFunction pochhammer_ratio(const std::vector<PochFactor>& fs, const Rational& z) {
  check_poch_factors(fs);
  Poly num(z), den(Rational(1));
  for (const auto& f : fs) {
    for (int j = 0; j < f.mult; ++j) {
      // alpha + mult*k + j
      Poly lin = Poly::linear(f.alpha + Rational(j), Rational(f.mult), Rational(0));
      for (int r = 0; r < std::abs(f.expnt); ++r) {
        if (f.expnt > 0)
          num = num * lin;
        else
          den = den * lin;
      }
    }
  }
  return RationalFunction(num, den);
}

Rational pochhammer_product(const std::vector<PochFactor>& fs, const Rational& z, long k) {
  check_poch_factors(fs);
  Rational v = z.pow_int(k);
  for (const auto& f : fs)
    v = v * pochhammer(f.alpha, static_cast<unsigned long>(f.mult) * k).pow_int(f.expnt);
  return v;
}

}  // namespace piharmonic
