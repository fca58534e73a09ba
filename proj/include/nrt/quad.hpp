#pragma once

// The real quadratic field Q(sqrt 2). Elements are a + b*sqrt2 with rational
// a, b; equality is component-wise and arithmetic is exact. This is the
// coefficient field for every matrix and polynomial in the library (rational
// values are the b = 0 special case).

#include <string>

#include "nrt/rational.hpp"

namespace nrt {

class QuadElement {
public:
    QuadElement() = default;
    QuadElement(long n) : a_(n) {}               // NOLINT
    QuadElement(const Rational& a) : a_(a) {}    // NOLINT
    QuadElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadElement sqrt2() { return QuadElement(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    // Throws unless the value lies in Q.
    Rational to_rational() const {
        if (!is_rational()) throw std::domain_error("QuadElement: " + str() + " is not rational");
        return a_;
    }

    // Field norm a^2 - 2b^2; zero only for the zero element.
    Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }

    QuadElement operator-() const { return {-a_, -b_}; }
    QuadElement& operator+=(const QuadElement& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadElement& operator-=(const QuadElement& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadElement& operator*=(const QuadElement& o) {
        // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s  with s^2 = 2
        Rational na = a_ * o.a_ + Rational(2) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuadElement inverse() const;
    QuadElement& operator/=(const QuadElement& o) { return *this *= o.inverse(); }

    friend QuadElement operator+(QuadElement x, const QuadElement& y) { return x += y; }
    friend QuadElement operator-(QuadElement x, const QuadElement& y) { return x -= y; }
    friend QuadElement operator*(QuadElement x, const QuadElement& y) { return x *= y; }
    friend QuadElement operator/(QuadElement x, const QuadElement& y) { return x /= y; }
    friend bool operator==(const QuadElement& x, const QuadElement& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadElement& x, const QuadElement& y) { return !(x == y); }

    // Total order for use as container key (lexicographic on components).
    int cmp(const QuadElement& o) const {
        if (int c = a_.cmp(o.a_)) return c;
        return b_.cmp(o.b_);
    }
    friend bool operator<(const QuadElement& x, const QuadElement& y) { return x.cmp(y) < 0; }

    double approx() const;

    // "a" when rational, else "a+b*sqrt2" (e.g. "1/2-3*sqrt2").
    std::string str() const;
    // Same, parenthesized when irrational; used when the value multiplies a monomial.
    std::string str_factor() const;

private:
    Rational a_, b_;
};

}  // namespace nrt
