#pragma once

#include <string>
#include <vector>

#include "piharmonic/bigreal.hpp"
#include "piharmonic/rational.hpp"
#include "piharmonic/series.hpp"

namespace piharmonic {

// Exact values of the certified pair at integer arguments. F(0, k) = 0.
Rational wz_F(long n, long k);
Rational wz_G(long n, long k);

// Diagonal companion H(n, k) = F(n+1, n+k) + G(n, n+k).
Rational wz_H(long n, long k);

// Gamma-function continuation of G in the second argument, for rational
// -1/2 < k < 1/2 (DomainError otherwise).
BigReal wz_G_real(long n, const Rational& k, const PrecisionContext& ctx);

// Exact sweep of the pair relation F(n+1,k) - F(n,k) == G(n,k+1) - G(n,k)
// over [0, n_max] x [0, k_max]. perturb_row replaces the row polynomial
// 20n+2k+3 of G by 21n+2k+3 (negative control); the first failing pair is
// named in `detail`.
struct PairSweepReport {
  bool pass = false;
  long checked = 0;
  std::string detail;
};
PairSweepReport wz_pair_sweep(long n_max, long k_max, bool perturb_row = false);

// Row sum over n >= 0 of G(n, k); constant in k. Exact first term at integer
// k >= 0, gamma continuation for non-integer rational k in (-1/2, 1/2).
SumResult wz_sum_G(const Rational& k, const PrecisionContext& ctx);

// Diagonal sum over n >= 0 of H(n, k) at integer k >= 0; terms decay like
// 64^{-n}.
SumResult wz_sum_H(long k, const PrecisionContext& ctx);

// Central difference (d/dk at k=0) of the row sum, which is constant in k;
// pass needs the value to vanish to at least 15 digits.
struct DdkReport {
  std::string value;
  int zero_digits = 0;
  bool pass = false;
};
DdkReport wz_ddk_check();

// G(n, 0) equals the (20k+3)-weight catalog term exactly for n <= n_max.
bool wz_bridge_check(long n_max);

// Telescoped corollaries of the pair: each combined series sums to zero, and
// its two exact channels reproduce the named catalog records term by term.
struct ZeroSeriesReport {
  std::string id;
  bool term_level_pass = false;
  long terms_checked = 0;
  int zero_digits = 0;
  bool pass = false;
};
std::vector<ZeroSeriesReport> wz_zero_series(int digits, long term_limit = 200);

}  // namespace piharmonic
