#pragma once

#include <map>
#include <vector>

#include "piharmonic/rational.hpp"

namespace piharmonic {

// One tracked harmonic quantity H^{(order)}_{mult*k}(shift) =
// sum_{j=1}^{mult*k} 1/(shift+j)^order. The plain numbers are the shift = 0
// cases: H_k = (1,1,0), H_{2k} = (1,2,0), H_{4k} = (1,4,0), H^{(2)}_k = (2,1,0),
// H^{(2)}_{2k} = (2,2,0).
struct HarmonicKey {
    int order = 1;   // 1 or 2
    int mult = 1;    // 1, 2, or 4
    Rational shift;  // must satisfy shift + j != 0 for every j >= 1 reached

    friend bool operator<(const HarmonicKey& a, const HarmonicKey& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.mult != b.mult) return a.mult < b.mult;
        return a.shift < b.shift;
    }
    friend bool operator==(const HarmonicKey& a, const HarmonicKey& b) {
        return a.order == b.order && a.mult == b.mult && a.shift == b.shift;
    }
};

// Exact values of a registered set of harmonic quantities at a common index k.
// Immutable: advanced(k+1) returns a new state, adding `mult` reciprocals per
// entry, so a summation loop costs O(registered reciprocals) per step instead
// of O(k).
class HarmonicState {
  public:
    // Builds the state at index k by direct summation (O(k) per entry).
    // The five plain keys are always registered; `extra` adds shifted ones.
    static HarmonicState at(long k, const std::vector<HarmonicKey>& extra = {});

    HarmonicState advanced() const;
    long k() const { return k_; }

    bool has(const HarmonicKey& key) const { return values_.count(key) != 0; }
    const Rational& value(const HarmonicKey& key) const;

    const Rational& h() const { return value({1, 1, Rational(0)}); }       // H_k
    const Rational& h_2k() const { return value({1, 2, Rational(0)}); }    // H_{2k}
    const Rational& h_4k() const { return value({1, 4, Rational(0)}); }    // H_{4k}
    const Rational& h2() const { return value({2, 1, Rational(0)}); }      // H^{(2)}_k
    const Rational& h2_2k() const { return value({2, 2, Rational(0)}); }   // H^{(2)}_{2k}
    const Rational& shifted(const Rational& x) const { return value({1, 1, x}); }

  private:
    long k_ = 0;
    std::map<HarmonicKey, Rational> values_;
};

inline HarmonicState harmonic_advance(const HarmonicState& s) { return s.advanced(); }

// H_k(x) = sum_{j=1}^{k} 1/(x+j), exact; throws PoleError naming the offending
// j when x + j = 0.
Rational shifted_harmonic(const Rational& x, long k);

// Order-2 variant sum_{j=1}^{k} 1/(x+j)^2.
Rational shifted_harmonic2(const Rational& x, long k);

inline Rational harmonic_number(long k) { return shifted_harmonic(Rational(0), k); }

}  // namespace piharmonic
