#pragma once

// Univariate polynomials over Q (UniPoly) and over Q(sqrt2) (QuadPoly), plus
// normalized rational functions and exact truncated power-series expansion.
// UniPoly backs Molien series; QuadPoly carries det(I - lambda*A) for matrices
// with irrational entries. Printing uses the ASCII variable "L".

#include <string>
#include <vector>

#include "nrt/quad.hpp"
#include "nrt/rational.hpp"

namespace nrt {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly monomial(const Rational& coeff, unsigned deg);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == Rational(1); }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly scale(const Rational& s) const;
    UniPoly pow(unsigned e) const;
    Rational eval(const Rational& x) const;

    // Euclidean division; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    // Monic gcd (zero if both zero).
    static UniPoly gcd(UniPoly a, UniPoly b);

    std::string str(const std::string& var = "L") const;

private:
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
    std::vector<Rational> c_;  // c_[i] is the coefficient of L^i; no trailing zeros
};

class QuadPoly {
public:
    QuadPoly() = default;
    QuadPoly(const QuadElement& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
    explicit QuadPoly(std::vector<QuadElement> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QuadPoly monomial(const QuadElement& coeff, unsigned deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    QuadElement coeff(size_t i) const { return i < c_.size() ? c_[i] : QuadElement(); }
    const std::vector<QuadElement>& coeffs() const { return c_; }

    QuadPoly operator-() const;
    friend QuadPoly operator+(const QuadPoly& a, const QuadPoly& b);
    friend QuadPoly operator-(const QuadPoly& a, const QuadPoly& b);
    friend QuadPoly operator*(const QuadPoly& a, const QuadPoly& b);
    friend bool operator==(const QuadPoly& a, const QuadPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QuadPoly& a, const QuadPoly& b) { return !(a == b); }

    QuadPoly pow(unsigned e) const;

    // Exact quotient; throws std::domain_error when the division leaves a remainder.
    static QuadPoly exact_divide(const QuadPoly& a, const QuadPoly& b);

    // True when every coefficient lies in Q.
    bool is_rational() const;
    UniPoly to_unipoly() const;

    std::string str(const std::string& var = "L") const;

private:
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
    std::vector<QuadElement> c_;
};

// num/den with gcd(num, den) = 1 and monic den. den is never zero.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(UniPoly num, UniPoly den);
    static RationalFunction one_over(const UniPoly& den) { return {UniPoly(Rational(1)), den}; }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction scale(const Rational& s) const { return {num_.scale(s), den_}; }

    std::string str(const std::string& var = "L") const;

private:
    UniPoly num_, den_;
};

// Coefficients of L^0..L^D of the power series of r at 0.
// Throws std::domain_error when den(0) = 0 (pole at the origin).
std::vector<Rational> series_expand(const RationalFunction& r, unsigned D);

}  // namespace nrt
