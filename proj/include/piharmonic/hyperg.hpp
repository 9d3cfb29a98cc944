#pragma once

#include <string>
#include <vector>

#include "piharmonic/ratfunc.hpp"
#include "piharmonic/rational.hpp"

namespace piharmonic {

// One numeric Pochhammer factor (alpha)_{mult*k}^{expnt}; negative expnt means
// the factor sits in the denominator.
struct PochFactor {
  Rational alpha;
  int mult = 1;   // 1 or 2
  int expnt = 1;  // signed exponent, nonzero
};

// Rejects factors that kill or blow up the series: a denominator factor whose
// alpha is a nonpositive integer hits a pole (PoleError), a numerator factor
// whose alpha is a nonpositive integer terminates the series (DomainError).
// Both messages name the factor.
void check_poch_factors(const std::vector<PochFactor>& fs);

// Exact step ratio of base(k) = z^k prod_f (alpha_f)_{mult_f k}^{expnt_f}:
// base(k+1)/base(k) = z * prod_f prod_{j=0}^{mult-1} (alpha + mult k + j)^{expnt}.
RationalFunction pochhammer_ratio(const std::vector<PochFactor>& fs, const Rational& z);

// Exact value prod_f (alpha_f)_{mult_f k}^{expnt_f} * z^k at one index.
Rational pochhammer_product(const std::vector<PochFactor>& fs, const Rational& z, long k);

std::string poch_factor_to_string(const PochFactor& f);

}  // namespace piharmonic
