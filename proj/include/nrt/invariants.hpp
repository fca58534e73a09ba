#pragma once

// Finite matrix groups over Q(sqrt2) and their polynomial invariant theory:
// closure from generators, Molien series (direct sum over the group and the
// closed forms for the <T>-groups of the binary Theta matrices), the Reynolds
// operator, invariant-space bases by degree, the Jacobian independence
// criterion, and the catalogued bases for the groups G1, G2, G3 attached to
// self-dual binary codes with s = 2.

#include <optional>
#include <string>
#include <vector>

#include "nrt/matrix.hpp"
#include "nrt/multipoly.hpp"
#include "nrt/unipoly.hpp"

namespace nrt {

struct MatrixGroup {
    size_t dim = 0;
    std::vector<DenseMatrix> elements;    // closed under product, contains I
    std::vector<DenseMatrix> generators;

    size_t order() const { return elements.size(); }
};

// Full multiplicative closure by breadth-first products with exact-equality
// hashing. Throws cap_exceeded when the closure grows past cap (an infinite
// or too-large group). Verifies identity and inverses on the way out.
MatrixGroup group_closure(const std::vector<DenseMatrix>& generators, size_t cap = 100000);

struct MolienSeries {
    RationalFunction closed;   // (1/|G|) sum 1/det(I - L*A), normalized
    std::vector<Int> coeffs;   // L^0..L^D; nonnegative integers

    const Int& coeff(size_t d) const { return coeffs.at(d); }
};

// Exact Molien series with coefficients through degree D. Every coefficient
// must come out a nonnegative integer; anything else throws std::domain_error
// (implementation-bug sentinel).
MolienSeries molien_series(const MatrixGroup& g, unsigned D);

// (1/|G|) sum trace(A): the number of linearly independent degree-1
// invariants, as an exact rational.
Rational degree1_count(const MatrixGroup& g);

enum class ReynoldsMode { Sum, Average };

// sum_{A in G} f(A Z), optionally divided by |G|. The output is G-invariant.
MultiPoly reynolds(const MatrixGroup& g, const MultiPoly& f, ReynoldsMode mode);

bool is_invariant(const MatrixGroup& g, const MultiPoly& f);

// Basis (canonical RREF representatives) of the degree-d invariants, obtained
// by Reynolds-averaging every degree-d monomial and row-reducing. The basis
// size must equal the Molien coefficient of L^d; a mismatch throws.
std::vector<MultiPoly> invariant_space_basis(const MatrixGroup& g, unsigned d);

// Jacobian criterion: true iff the Jacobian has full rank over the fraction
// field. Rank is decided at five deterministic integer points, escalating to
// symbolic minor expansion before declaring rank-deficiency.
bool jacobian_independent(const std::vector<MultiPoly>& fs);

// The group fixing shape enumerators of binary self-dual codes: {I, T} for
// even s and {I, -I, T, -T} for odd s, with T = Theta_s / 2^{s/2}.
MatrixGroup theta_group(uint32_t s);

// Closed-form Molien series of theta_group(s) (binomial numerator over
// (1-L^2)/(1-L) powers), normalized so it can be compared against
// molien_series(theta_group(s), ...).closed directly.
RationalFunction closed_form_molien(uint32_t s);

enum class BasisKind { Primary, Secondary };

struct BasisEntry {
    std::string name;
    MultiPoly poly{3};
    uint32_t degree = 0;
    BasisKind kind = BasisKind::Primary;
};

struct KnownBasis {
    std::string group_name;  // "G1", "G2", "G3"
    MatrixGroup group;
    std::vector<BasisEntry> entries;  // primaries first, then secondaries

    // G3 only: the degree-2 invariant 2z0^2 - 2z1^2 + 8z1z2 (the Reynolds sum
    // of z1z2); the catalogued degree-6 primary is its cube.
    std::optional<MultiPoly> star;

    std::vector<const BasisEntry*> primaries() const;
    std::vector<const BasisEntry*> secondaries() const;
};

// The catalogued bases:
//   G1 = <T>:    phi1 = z0+z2, phi2 = z0+z1, phi3 = z0^2+z1^2+2z2^2.
//   G2 = <T,A>:  p1 = z0+z2, p2 = z0^2+z1^2+2z2^2, p3 = z0^3+4z2^3+3z1^2z0.
//   G3 = <T,B>:  phi1 = z0^2+z1^2+2z2^2, phi2 = 5z0^2-2z0z1+z1^2+8z2^2+8z2z1
//                (catalogued form; NOTE: phi2 is algebraically independent of
//                the others but is NOT itself G3-invariant — the degree-2
//                invariant space is spanned by phi1 and star), phi3 = star^3,
//                and the computed degree-4 secondary phi4.
KnownBasis known_basis(const std::string& name);
std::vector<KnownBasis> known_bases();

struct BasisCombination {
    struct Term {
        std::vector<uint32_t> powers;  // exponent per primary entry
        int secondary = -1;            // index into secondaries, -1 for none
        QuadElement coeff;
    };
    std::vector<Term> terms;

    std::string str(const KnownBasis& basis) const;
};

// Writes homogeneous H as sum of coeff * prod(primary_i^a_i) [* secondary],
// solving the exact linear system over all degree-matching products. Throws
// std::domain_error when no solution exists (H not invariant or wrong basis).
BasisCombination express_in_basis(const MultiPoly& h, const KnownBasis& basis);

// Evaluates a combination back to a polynomial (test/verification helper).
MultiPoly combination_value(const BasisCombination& c, const KnownBasis& basis);

// Exact RREF over Q(sqrt2); returns pivot column indices. Exposed for reuse
// in tests and the classification tooling.
std::vector<size_t> quad_rref(std::vector<std::vector<QuadElement>>& m);

}  // namespace nrt
