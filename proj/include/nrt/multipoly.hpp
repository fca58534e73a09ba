#pragma once

// Dense-exponent multivariate polynomials over Q(sqrt2) in variables
// z0..z_{m-1}. Terms are kept in a map ordered by descending graded
// lexicographic order with z0 highest, which doubles as the canonical
// printing order. No zero coefficients are ever stored.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nrt/quad.hpp"

namespace nrt {

using Exponents = std::vector<uint32_t>;

// Descending graded lex: higher total degree first; ties broken so that the
// exponent vector that is lexicographically larger (z0 weighted highest)
// comes first. This makes map iteration emit z0^2 before z0*z1 before z1^2.
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
public:
    explicit MultiPoly(uint32_t vars = 0) : m_(vars) {}
    static MultiPoly constant(uint32_t vars, const QuadElement& c);
    static MultiPoly variable(uint32_t vars, uint32_t i);

    uint32_t vars() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, QuadElement, GrlexDesc>& terms() const { return terms_; }

    QuadElement coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const QuadElement& c);

    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    // Sum of all coefficients (evaluation at z = (1,...,1)).
    QuadElement coeff_sum() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scale(const QuadElement& s) const;
    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(uint32_t var) const;
    QuadElement eval(const std::vector<QuadElement>& point) const;

    // Canonical string form: graded-lex terms, e.g. "z0^2 + z1^2 + 2*z2^2".
    std::string str() const;
    // Parses the same grammar (signs, '*' products, '^' powers, rationals,
    // "sqrt2", parenthesized a+b*sqrt2 coefficients).
    static MultiPoly parse(const std::string& text, uint32_t vars);

private:
    uint32_t m_;
    std::map<Exponents, QuadElement, GrlexDesc> terms_;
};

// All exponent vectors of total degree d in m variables, in descending
// graded-lex order (the canonical monomial enumeration used for linear
// algebra on coefficient vectors).
std::vector<Exponents> monomials_of_degree(uint32_t m, uint32_t d);

// Entry (i,j) is d f_i / d z_j. All polynomials must share a variable count.
std::vector<std::vector<MultiPoly>> jacobian_matrix(const std::vector<MultiPoly>& fs);

}  // namespace nrt
