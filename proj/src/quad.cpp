#include "nrt/quad.hpp"

#include <cmath>

namespace nrt {

QuadElement QuadElement::inverse() const {
    if (is_zero()) throw std::domain_error("QuadElement: division by zero");
    // 1/(a + b s) = (a - b s)/(a^2 - 2 b^2); the norm vanishes only at zero
    // because sqrt2 is irrational.
    Rational n = norm();
    return {a_ / n, -b_ / n};
}

double QuadElement::approx() const {
    return a_.approx() + b_.approx() * std::sqrt(2.0);
}

std::string QuadElement::str() const {
    if (b_.is_zero()) return a_.str();
    Rational abs_b = b_.sign() < 0 ? -b_ : b_;
    return a_.str() + (b_.sign() < 0 ? "-" : "+") + abs_b.str() + "*sqrt2";
}

std::string QuadElement::str_factor() const {
    if (b_.is_zero()) return a_.str();
    return "(" + str() + ")";
}

}  // namespace nrt
