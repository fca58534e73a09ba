#pragma once

// Flip / ordered-flip operators and the self-orthogonal / self-dual code
// constructions: Hamming-space liftings into M_{1,2s}, generator-matrix
// interleaving, zero-padded concatenation, and the exhaustive ns = 4
// classification of bidimensional self-dual codes.
//
// Hamming-space inputs are carried as NrtCode values with n = 1; the
// *_hamming_* helpers interpret the same row space under the standard inner
// product instead of the reversed one.

#include <vector>

#include "nrt/nrt_core.hpp"

namespace nrt {

// Coordinate reversal of one vector.
gf::Row flip_vector(const gf::Row& v);

// Flip(A): reverse every row of a k x s matrix (rows as vectors).
std::vector<gf::Row> flip_matrix(const std::vector<gf::Row>& a);

// A^o = Flip(A)^T, an s x k matrix.
std::vector<gf::Row> flip_transpose(const std::vector<gf::Row>& a);

// OFlip(G): Flip applied to each of the n width-s blocks of a k x ns matrix.
std::vector<gf::Row> ordered_flip(const std::vector<gf::Row>& g, uint32_t n, uint32_t s);

// G^od = OFlip(G)^T, an (ns) x k matrix (the blocks' A^o stacked vertically).
std::vector<gf::Row> od_transpose(const std::vector<gf::Row>& g, uint32_t n, uint32_t s);

// G * G^od over GF(q) (k x k); the code is self-orthogonal iff this is zero.
std::vector<gf::Row> g_god_product(const NrtCode& c);
bool g_god_is_zero(const NrtCode& c);

// Standard-inner-product (Hamming) counterparts on the flattened row space.
NrtCode hamming_dual(const NrtCode& c);
bool is_hamming_self_orthogonal(const NrtCode& c);
bool is_hamming_self_dual(const NrtCode& c);

// C_o = {(v, flip(u)) : v in C, u in C^perp_H} in M_{1,2s}; input must have
// n = 1. The Hamming dual is computed internally. Output dimension k + k^perp.
NrtCode construct_co(const NrtCode& c);

// C_ort = {(v, flip(v)) : v in C} in M_{1,2s}; input must be Hamming
// self-orthogonal. Output dimension k.
NrtCode construct_cort(const NrtCode& c);

// C_N = {(v, flip(v')) : v, v' in C} in M_{1,2s}; input must be Hamming
// self-dual. Output: self-dual of dimension 2k.
NrtCode construct_cn(const NrtCode& c);

// Interleaves two self-orthogonal codes with identical (n, s, q) into a
// self-orthogonal code in M_{2n,s} of dimension k1 + k2: block 2i of the
// result is block i of c1 (top rows) and block 2i+1 is block i of c2
// (bottom rows).
NrtCode construct_interleave(const NrtCode& c1, const NrtCode& c2);

// Block-diagonal concatenation of self-orthogonal codes, padding every block
// with zero columns to the widest s. Requires sum(k_i) <= max(n_i)*max(s_i).
// The result is re-verified; padding a block with s_bar/2 < s_i < s_bar can
// break orthogonality outside characteristic 2, and that failure throws.
NrtCode construct_padded_concat(const std::vector<NrtCode>& codes);

struct ClassifiedCode {
    std::string case_name;  // "i" (M_{1,4}), "ii" (M_{2,2}), "iii" (M_{4,1})
    unsigned family = 0;    // 1-based index into the catalogued list
    uint32_t lambda = 0;    // parameter value; 0 when the family has none
    NrtCode code;
};

// The catalogued generator-matrix families of bidimensional self-dual codes
// (ns = 4): the 8 for M_{1,4}, the 12 for M_{2,2} (lambda ranging over
// nonzero field elements where a family has the parameter), and the M_{4,1}
// self-dual codes found by brute force. Every emitted code is verified
// self-dual. Throws cap_exceeded for q > q_cap.
std::vector<ClassifiedCode> classify_ns4(uint32_t q, uint32_t q_cap = 5);

// Distinct row spaces among the emitted codes (families overlap heavily).
std::vector<NrtCode> distinct_codes(const std::vector<ClassifiedCode>& list);

// All self-dual codes of M_{n,s}(F_q) by exhaustive RREF enumeration of
// ns/2-dimensional subspaces. ns must be even.
std::vector<NrtCode> all_self_dual_codes(uint32_t q, uint32_t n, uint32_t s);

}  // namespace nrt
