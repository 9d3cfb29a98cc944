#include "piharmonic/rational.hpp"

#include <cctype>
#include <mutex>
#include <ostream>
#include <vector>

namespace piharmonic {

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(static_cast<signed long>(n), static_cast<signed long>(d));
    q_.canonicalize();
}

Rational::Rational(mpz_class n, mpz_class d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(std::move(n), std::move(d));
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string ns = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string ds = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds))
        throw ParseError("bad rational literal '" + text + "' (use p or p/q, no decimals)");
    mpz_class n(ns), d(ds);
    if (d == 0) throw ParseError("bad rational literal '" + text + "' (zero denominator)");
    return Rational(std::move(n), std::move(d));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DomainError("zero to a negative power");
        return Rational(0);
    }
    mpq_class base = (e > 0) ? q_ : mpq_class(1 / q_);
    unsigned long n = (e > 0) ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-(e + 1)) + 1;
    mpz_class nn, dd;
    mpz_pow_ui(nn.get_mpz_t(), base.get_num().get_mpz_t(), n);
    mpz_pow_ui(dd.get_mpz_t(), base.get_den().get_mpz_t(), n);
    return Rational(std::move(nn), std::move(dd));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer()) throw DomainError("to_long on non-integer " + to_string());
    if (!q_.get_num().fits_slong_p()) throw DomainError("integer too large for long: " + to_string());
    return q_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational pochhammer(const Rational& x, unsigned long n) {
    mpq_class acc(1);
    mpq_class term(x.raw());
    for (unsigned long j = 0; j < n; ++j) {
        acc *= term;
        term += 1;
    }
    Rational r{acc};
    return r;
}

namespace {
// Guarded by bernoulli_mutex; grows monotonically.
std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    return cache;
}
std::mutex bernoulli_mutex;
}  // namespace

const Rational& bernoulli(unsigned long n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& cache = bernoulli_cache();
    while (cache.size() <= n) {
        const unsigned long m = cache.size();  // compute B_m
        if (m % 2 == 1) {
            cache.emplace_back(0);
            continue;
        }
        // B_m = -(1/(m+1)) sum_{j<m} C(m+1,j) B_j
        Rational acc(0);
        for (unsigned long j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) continue;  // odd Bernoulli numbers beyond B_1 vanish
            acc += Rational(binomial(m + 1, j)) * cache[j];
        }
        cache.push_back(-acc / Rational(mpz_class(m + 1)));
    }
    return cache[n];
}

Rational bernoulli_poly(unsigned long n, const Rational& x) {
    Rational acc(0);
    for (unsigned long j = 0; j <= n; ++j) {
        const Rational& bj = bernoulli(j);
        if (!bj.is_zero()) acc += Rational(binomial(n, j)) * bj * x.pow_int(static_cast<long>(n - j));
    }
    return acc;
}

}  // namespace piharmonic
