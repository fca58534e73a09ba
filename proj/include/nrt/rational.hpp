#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and reduced rationals.
// Thin wrappers over GMP that pin down the invariants the rest of the library
// relies on: rationals are always reduced with positive denominator, and all
// failure modes (division by zero) throw instead of trapping.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nrt {

using Int = mpz_class;

// Integer power, e >= 0.
inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}        // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}  // NOLINT
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Accepts "a" or "a/b" in base 10.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    }

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Throws unless the value is an integer.
    Int to_integer() const {
        if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
        return v_.get_num();
    }

    double approx() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return from(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

private:
    static Rational from(const mpq_class& q) {
        Rational r;
        r.v_ = q;
        return r;
    }
    mpq_class v_;  // GMP keeps this canonical: gcd(num,den)=1, den>0
};

inline Rational rpow(const Rational& base, unsigned long e) {
    return Rational(ipow(base.numerator(), e), ipow(base.denominator(), e));
}

// Cap violations (codeword enumeration, isometry streaming, group closure).
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nrt
