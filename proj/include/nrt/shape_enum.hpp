#pragma once

// Shape enumerators, the Theta_s MacWilliams kernel, the transform relating a
// code's enumerator to its dual's, and the verified algebraic properties of
// the binary Theta matrix (square, trace, determinant, spectrum).
//
// Index convention: entry (l, k) of Theta_s (0 <= l, k <= s) is
//     1                  if k = 0
//     q^{k-1} (q - 1)    if 0 < k <= s - l
//     -q^{k-1}           if l + k = s + 1
//     0                  if l + k > s + 1
// which reproduces the classical binary kernel [[1,1],[1,-1]] at s = 1 and is
// validated against the dual enumerator by exhaustive brute force in tests.

#include <string>
#include <vector>

#include "nrt/matrix.hpp"
#include "nrt/multipoly.hpp"
#include "nrt/nrt_core.hpp"

namespace nrt {

// Homogeneous degree-n polynomial in z0..zs with nonnegative integer
// coefficients summing to q^k.
struct ShapeEnumerator {
    uint32_t s = 0;
    uint32_t n = 0;
    MultiPoly poly{1};

    std::string str() const { return poly.str(); }
    friend bool operator==(const ShapeEnumerator& a, const ShapeEnumerator& b) {
        return a.s == b.s && a.n == b.n && a.poly == b.poly;
    }
};

ShapeEnumerator shape_enumerator(const NrtCode& c, uint64_t cap = kDefaultEnumCap);

struct ThetaMatrix {
    uint32_t s = 1, q = 2;
    std::vector<std::vector<Int>> a;  // (s+1) x (s+1)

    const Int& at(uint32_t l, uint32_t k) const { return a[l][k]; }
    DenseMatrix dense() const;
    std::string str() const;
};

ThetaMatrix theta_matrix(uint32_t s, uint32_t q);

// H_{C^perp}(Z) = (1/|C|) H_C(Theta_s Z). code_size must be |C| = q^k; a
// transform that does not land on nonnegative integer coefficients throws
// std::domain_error (it signals a malformed enumerator or wrong size).
ShapeEnumerator macwilliams_transform(const ShapeEnumerator& h, uint32_t q, const Int& code_size);

struct ThetaSpectrum {
    uint32_t r1 = 0, r2 = 0;      // multiplicities of +q^{s/2} and -q^{s/2}
    QuadElement beta1, beta2;     // the eigenvalues themselves
};

struct ThetaCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ThetaReport {
    uint32_t s = 1;
    Int trace, det;
    ThetaSpectrum spectrum;
    std::vector<ThetaCheck> checks;
    bool all_ok() const;
};

// Verifies, over the integers / Q(sqrt2):
//   Theta_s^2 = 2^s I;  trace = 2^{s/2} (even s) or 0 (odd s);
//   det = (-1)^{s/2} 2^{s(s+1)/2} (even) / (-1)^{(s+1)/2} 2^{s(s+1)/2} (odd);
//   det(I - L*Theta) = (1 - bL)^{r1} (1 + bL)^{r2} with b = 2^{s/2},
//   r1 = (s+2)/2, r2 = s/2 for even s and r1 = r2 = (s+1)/2 for odd s;
//   minimal polynomial (L - b)(L + b).
// Defined for q = 2 only.
ThetaReport verify_theta_properties(uint32_t s, uint32_t q = 2);

// T = Theta_s / 2^{s/2} (q = 2): rational for even s, in Q(sqrt2) for odd s;
// satisfies T^2 = I.
DenseMatrix normalized_T(uint32_t s);

}  // namespace nrt
