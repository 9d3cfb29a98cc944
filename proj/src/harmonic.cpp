#include "piharmonic/harmonic.hpp"

namespace piharmonic {

namespace {

Rational reciprocal_power(const Rational& x, long j, int order) {
    Rational d = x + Rational(j);
    if (d.is_zero())
        throw PoleError("shifted harmonic pole: shift " + x.to_string() + " at j = " + std::to_string(j));
    Rational r = d.inverse();
    return order == 1 ? r : r * r;
}

Rational partial(const HarmonicKey& key, long k) {
    Rational acc(0);
    const long terms = static_cast<long>(key.mult) * k;
    for (long j = 1; j <= terms; ++j) acc += reciprocal_power(key.shift, j, key.order);
    return acc;
}

}  // namespace

HarmonicState HarmonicState::at(long k, const std::vector<HarmonicKey>& extra) {
    if (k < 0) throw DomainError("harmonic state at negative index");
    HarmonicState s;
    s.k_ = k;
    const std::vector<HarmonicKey> plain = {
        {1, 1, Rational(0)}, {1, 2, Rational(0)}, {1, 4, Rational(0)},
        {2, 1, Rational(0)}, {2, 2, Rational(0)},
    };
    for (const auto& key : plain) s.values_.emplace(key, partial(key, k));
    for (const auto& key : extra) {
        if (key.order < 1 || key.order > 2 || (key.mult != 1 && key.mult != 2 && key.mult != 4))
            throw DomainError("unsupported harmonic key");
        s.values_.emplace(key, partial(key, k));
    }
    return s;
}

HarmonicState HarmonicState::advanced() const {
    HarmonicState s;
    s.k_ = k_ + 1;
    for (const auto& [key, val] : values_) {
        Rational acc = val;
        for (long j = static_cast<long>(key.mult) * k_ + 1; j <= static_cast<long>(key.mult) * s.k_; ++j)
            acc += reciprocal_power(key.shift, j, key.order);
        s.values_.emplace(key, std::move(acc));
    }
    return s;
}

const Rational& HarmonicState::value(const HarmonicKey& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
        throw DomainError("harmonic key not registered (order " + std::to_string(key.order) +
                          ", mult " + std::to_string(key.mult) + ", shift " + key.shift.to_string() + ")");
    return it->second;
}

Rational shifted_harmonic(const Rational& x, long k) {
    if (k < 0) throw DomainError("shifted harmonic at negative index");
    Rational acc(0);
    for (long j = 1; j <= k; ++j) acc += reciprocal_power(x, j, 1);
    return acc;
}

Rational shifted_harmonic2(const Rational& x, long k) {
    if (k < 0) throw DomainError("shifted harmonic at negative index");
    Rational acc(0);
    for (long j = 1; j <= k; ++j) acc += reciprocal_power(x, j, 2);
    return acc;
}

}  // namespace piharmonic
