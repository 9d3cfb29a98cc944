#include "piharmonic/ratfunc.hpp"

#include <sstream>

namespace piharmonic {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) coeffs_ = {{c}};
}

Poly Poly::var_k() {
    Poly p;
    p.coeffs_ = {{Rational(0)}, {Rational(1)}};
    return p;
}

Poly Poly::var_p() {
    Poly p;
    p.coeffs_ = {{Rational(0), Rational(1)}};
    return p;
}

Poly Poly::linear(const Rational& a, const Rational& b_k, const Rational& c_p) {
    Poly p;
    p.set_coeff(0, 0, a);
    p.set_coeff(1, 0, b_k);
    p.set_coeff(0, 1, c_p);
    return p;
}

bool Poly::is_zero() const { return coeffs_.empty(); }

int Poly::deg_k() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }

int Poly::deg_p() const {
    int d = 0;
    for (const auto& row : coeffs_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

Rational Poly::coeff(int i, int j) const {
    if (i < 0 || j < 0) return Rational(0);
    if (static_cast<std::size_t>(i) >= coeffs_.size()) return Rational(0);
    const auto& row = coeffs_[i];
    if (static_cast<std::size_t>(j) >= row.size()) return Rational(0);
    return row[j];
}

void Poly::set_coeff(int i, int j, const Rational& c) {
    if (i < 0 || j < 0) throw DomainError("negative monomial degree");
    if (static_cast<std::size_t>(i) >= coeffs_.size()) coeffs_.resize(i + 1);
    auto& row = coeffs_[i];
    if (static_cast<std::size_t>(j) >= row.size()) row.resize(j + 1, Rational(0));
    row[j] = c;
    trim();
}

void Poly::trim() {
    for (auto& row : coeffs_)
        while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& row : r.coeffs_)
        for (auto& c : row) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_[i].size(); ++j)
            if (!b.coeffs_[i][j].is_zero())
                r.set_coeff(static_cast<int>(i), static_cast<int>(j),
                            r.coeff(static_cast<int>(i), static_cast<int>(j)) + b.coeffs_[i][j]);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < a.coeffs_[i].size(); ++j) {
            if (a.coeffs_[i][j].is_zero()) continue;
            for (std::size_t m = 0; m < b.coeffs_.size(); ++m)
                for (std::size_t n = 0; n < b.coeffs_[m].size(); ++n) {
                    if (b.coeffs_[m][n].is_zero()) continue;
                    const int ii = static_cast<int>(i + m), jj = static_cast<int>(j + n);
                    r.set_coeff(ii, jj, r.coeff(ii, jj) + a.coeffs_[i][j] * b.coeffs_[m][n]);
                }
        }
    r.trim();
    return r;
}

Poly Poly::operator*(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& row : r.coeffs_)
        for (auto& c : row) c *= s;
    return r;
}

Poly Poly::derivative_k() const {
    Poly r;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < coeffs_[i].size(); ++j)
            if (!coeffs_[i][j].is_zero())
                r.set_coeff(static_cast<int>(i) - 1, static_cast<int>(j),
                            coeffs_[i][j] * Rational(static_cast<long>(i)));
    return r;
}

Poly Poly::derivative_p() const {
    Poly r;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 1; j < coeffs_[i].size(); ++j)
            if (!coeffs_[i][j].is_zero())
                r.set_coeff(static_cast<int>(i), static_cast<int>(j) - 1,
                            coeffs_[i][j] * Rational(static_cast<long>(j)));
    return r;
}

Poly Poly::substitute_p(const Rational& p0) const {
    Poly r;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Rational acc(0);
        for (std::size_t j = coeffs_[i].size(); j-- > 0;) acc = acc * p0 + coeffs_[i][j];
        if (!acc.is_zero()) r.set_coeff(static_cast<int>(i), 0, acc);
    }
    return r;
}

Rational Poly::eval(const Rational& k, const Rational& p) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        Rational row(0);
        for (std::size_t j = coeffs_[i].size(); j-- > 0;) row = row * p + coeffs_[i][j];
        acc = acc * k + row;
    }
    return acc;
}

Rational Poly::eval_k(const Rational& k) const {
    if (deg_p() != 0) throw DomainError("eval_k on a polynomial with a free parameter");
    return eval(k, Rational(0));
}

std::vector<Rational> Poly::coeffs_desc_k() const {
    if (deg_p() != 0) throw DomainError("coeffs_desc_k on a polynomial with a free parameter");
    std::vector<Rational> out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) out.push_back(coeff(static_cast<int>(i), 0));
    if (out.empty()) out.push_back(Rational(0));
    return out;
}

std::string Poly::to_string(const std::string& kname, const std::string& pname) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t ii = coeffs_.size(); ii-- > 0;)
        for (std::size_t jj = (ii < coeffs_.size() ? coeffs_[ii].size() : 0); jj-- > 0;) {
            const Rational& c = coeffs_[ii][jj];
            if (c.is_zero()) continue;
            if (!first) os << (c.is_negative() ? " - " : " + ");
            else if (c.is_negative()) os << "-";
            first = false;
            const Rational a = c.abs();
            std::vector<std::string> parts;
            if (a != Rational(1) || (ii == 0 && jj == 0)) parts.push_back(a.to_string());
            if (ii > 0) parts.push_back(ii > 1 ? kname + "^" + std::to_string(ii) : kname);
            if (jj > 0) parts.push_back(jj > 1 ? pname + "^" + std::to_string(jj) : pname);
            for (std::size_t t = 0; t < parts.size(); ++t) os << (t ? "*" : "") << parts[t];
        }
    return os.str();
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    // Scale so den has integer coefficients with content 1 and positive leading
    // coefficient (lexicographically highest monomial).
    mpz_class den_gcd(0), den_lcm(1);
    int lead_sign = 0;
    for (int i = den_.deg_k(); i >= 0; --i)
        for (int j = den_.deg_p(); j >= 0; --j) {
            const Rational c = den_.coeff(i, j);
            if (c.is_zero()) continue;
            if (lead_sign == 0) lead_sign = c.sign();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den_gcd.get_mpz_t(), c.num().get_mpz_t());
            den_gcd = g;
            mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
            den_lcm = g;
        }
    if (den_gcd == 0) throw DomainError("rational function with zero denominator");
    Rational scale{mpz_class(den_lcm * lead_sign), den_gcd};
    num_ = num_ * scale;
    den_ = den_ * scale;
}

Rational RationalFunction::eval(const Rational& k, const Rational& p) const {
    const Rational d = den_.eval(k, p);
    if (d.is_zero()) throw PoleError("rational function pole at k = " + k.to_string());
    return num_.eval(k, p) / d;
}

Rational RationalFunction::eval_k(const Rational& k) const {
    const Rational d = den_.eval_k(k);
    if (d.is_zero()) throw PoleError("rational function pole at k = " + k.to_string());
    return num_.eval_k(k) / d;
}

RationalFunction RationalFunction::substitute_p(const Rational& p0) const {
    return RationalFunction(num_.substitute_p(p0), den_.substitute_p(p0));
}

RationalFunction RationalFunction::derivative_k() const {
    return RationalFunction(num_.derivative_k() * den_ - num_ * den_.derivative_k(), den_ * den_);
}

RationalFunction RationalFunction::derivative_p() const {
    return RationalFunction(num_.derivative_p() * den_ - num_ * den_.derivative_p(), den_ * den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw DomainError("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator*(const Rational& s) const {
    return RationalFunction(num_ * s, den_);
}

std::string RationalFunction::to_string(const std::string& kname, const std::string& pname) const {
    std::string n = num_.to_string(kname, pname);
    if (den_.deg_k() == 0 && den_.deg_p() == 0 && den_.coeff(0, 0) == Rational(1)) return n;
    return "(" + n + ")/(" + den_.to_string(kname, pname) + ")";
}

Rational rf_eval(const RationalFunction& rf, const std::map<std::string, Rational>& bindings,
                 const std::string& param_name) {
    auto kit = bindings.find("k");
    if (kit == bindings.end()) throw DomainError("missing binding for k");
    Rational p(0);
    const bool needs_p = rf.num().deg_p() > 0 || rf.den().deg_p() > 0;
    auto pit = bindings.find(param_name);
    if (pit != bindings.end()) p = pit->second;
    else if (needs_p) throw DomainError("missing binding for parameter " + param_name);
    return rf.eval(kit->second, p);
}

RationalFunction rf_derivative(const RationalFunction& rf, const std::string& var,
                               const std::string& param_name) {
    if (var == "k") return rf.derivative_k();
    if (var == param_name) return rf.derivative_p();
    throw DomainError("unknown variable " + var);
}

}  // namespace piharmonic
