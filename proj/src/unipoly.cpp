#include "nrt/unipoly.hpp"

#include <algorithm>
#include <type_traits>

namespace nrt {

UniPoly UniPoly::monomial(const Rational& coeff, unsigned deg) {
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = coeff;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scale(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    UniPoly rem = a;
    if (rem.degree() < b.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(rem.degree() - b.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        size_t shift = rem.degree() - b.degree();
        Rational f = rem.leading() / b.leading();
        q[shift] = f;
        std::vector<Rational> nc = rem.c_;
        for (size_t i = 0; i < b.c_.size(); ++i) nc[i + shift] -= f * b.c_[i];
        rem = UniPoly(std::move(nc));
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scale(Rational(1) / a.leading());  // monic
}

QuadPoly QuadPoly::monomial(const QuadElement& coeff, unsigned deg) {
    std::vector<QuadElement> c(deg + 1, QuadElement());
    c[deg] = coeff;
    return QuadPoly(std::move(c));
}

QuadPoly QuadPoly::operator-() const {
    std::vector<QuadElement> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return QuadPoly(std::move(c));
}

QuadPoly operator+(const QuadPoly& a, const QuadPoly& b) {
    std::vector<QuadElement> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return QuadPoly(std::move(c));
}

QuadPoly operator-(const QuadPoly& a, const QuadPoly& b) { return a + (-b); }

QuadPoly operator*(const QuadPoly& a, const QuadPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<QuadElement> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QuadPoly(std::move(c));
}

QuadPoly QuadPoly::pow(unsigned e) const {
    QuadPoly r(QuadElement(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

QuadPoly QuadPoly::exact_divide(const QuadPoly& a, const QuadPoly& b) {
    if (b.is_zero()) throw std::domain_error("QuadPoly: division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("QuadPoly: inexact division");
    QuadPoly rem = a;
    std::vector<QuadElement> q(a.degree() - b.degree() + 1);
    QuadElement lead_inv = b.c_.back().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        size_t shift = rem.degree() - b.degree();
        QuadElement f = rem.c_.back() * lead_inv;
        q[shift] = f;
        std::vector<QuadElement> nc = rem.c_;
        for (size_t i = 0; i < b.c_.size(); ++i) nc[i + shift] -= f * b.c_[i];
        rem = QuadPoly(std::move(nc));
    }
    if (!rem.is_zero()) throw std::domain_error("QuadPoly: inexact division");
    return QuadPoly(std::move(q));
}

bool QuadPoly::is_rational() const {
    for (const auto& c : c_)
        if (!c.is_rational()) return false;
    return true;
}

UniPoly QuadPoly::to_unipoly() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].to_rational();
    return UniPoly(std::move(c));
}

namespace {

// Shared term-by-term printer for both coefficient types.
template <typename Coeff>
std::string term_str(const Coeff& coeff, size_t deg, const std::string& var) {
    std::string cs;
    if constexpr (std::is_same_v<Coeff, QuadElement>) {
        cs = coeff.str_factor();
    } else {
        cs = coeff.str();
    }
    if (deg == 0) return cs;
    std::string mono = var + (deg == 1 ? "" : "^" + std::to_string(deg));
    if (cs == "1") return mono;
    if (cs == "-1") return "-" + mono;
    return cs + "*" + mono;
}

template <typename Poly, typename Coeff>
std::string render(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        Coeff c = p.coeffs()[i];
        if (c == Coeff(0)) continue;
        std::string t = term_str(c, i, var);
        if (first) {
            out = t;
            first = false;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

}  // namespace

std::string UniPoly::str(const std::string& var) const { return render<UniPoly, Rational>(*this, var); }
std::string QuadPoly::str(const std::string& var) const { return render<QuadPoly, QuadElement>(*this, var); }

RationalFunction::RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UniPoly::divmod(num_, g).first;
        den_ = UniPoly::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    den_ = den_.scale(Rational(1) / lead);
    num_ = num_.scale(Rational(1) / lead);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

std::string RationalFunction::str(const std::string& var) const {
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::vector<Rational> series_expand(const RationalFunction& r, unsigned D) {
    Rational d0 = r.den().coeff(0);
    if (d0.is_zero()) throw std::domain_error("series_expand: pole at L = 0");
    std::vector<Rational> c(D + 1, Rational(0));
    for (unsigned k = 0; k <= D; ++k) {
        Rational acc = r.num().coeff(k);
        unsigned jmax = std::min<unsigned>(k, static_cast<unsigned>(std::max(0, r.den().degree())));
        for (unsigned j = 1; j <= jmax; ++j) acc -= r.den().coeff(j) * c[k - j];
        c[k] = acc / d0;
    }
    return c;
}

}  // namespace nrt
