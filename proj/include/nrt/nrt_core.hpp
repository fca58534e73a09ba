#pragma once

// NRT words and codes: weights, shapes, the reversed-coordinate inner
// product, canonical (RREF) generator matrices, dual codes by exact null
// space solve, the isometry group of M_{n,s}(F_q), and brute-force code
// equivalence. Words are n x s matrices over GF(p); a word flattens to a row
// vector row-major (row i occupies columns i*s .. i*s+s-1).

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nrt/gf.hpp"
#include "nrt/rational.hpp"

namespace nrt {

inline constexpr uint64_t kDefaultEnumCap = uint64_t(1) << 24;
inline constexpr uint64_t kDefaultIsoCap = 10'000'000;

struct NrtWord {
    uint32_t q = 2, n = 1, s = 1;
    std::vector<uint8_t> e;  // n*s entries, row-major

    NrtWord() = default;
    NrtWord(uint32_t q_, uint32_t n_, uint32_t s_);
    NrtWord(uint32_t q_, uint32_t n_, uint32_t s_, std::vector<uint8_t> entries);

    uint8_t at(uint32_t i, uint32_t j) const { return e[i * s + j]; }
    uint8_t& at(uint32_t i, uint32_t j) { return e[i * s + j]; }
    bool is_zero() const;
    bool same_space(const NrtWord& o) const { return q == o.q && n == o.n && s == o.s; }

    NrtWord operator+(const NrtWord& o) const;
    NrtWord scaled(uint8_t c) const;
    friend bool operator==(const NrtWord& a, const NrtWord& b) { return a.q == b.q && a.n == b.n && a.s == b.s && a.e == b.e; }
    friend bool operator<(const NrtWord& a, const NrtWord& b) { return a.e < b.e; }

    std::string str() const;
};

// NRT weight of one row: index (1-based) of the last nonzero entry, 0 for a
// zero row.
uint32_t nrt_row_weight(const NrtWord& w, uint32_t i);

// Word weight: sum of row weights; equals sum of j*e_j over the shape.
uint32_t nrt_weight(const NrtWord& w);

struct ShapeVector {
    uint32_t n = 0, s = 0;
    std::vector<uint32_t> e;  // e[j-1] = number of rows of weight j, j = 1..s
    uint32_t e0 = 0;          // rows of weight 0; e0 + sum(e) = n

    // Exponent vector (e0, e1, ..., es) for the shape monomial.
    std::vector<uint32_t> exponents() const;
    friend bool operator==(const ShapeVector& a, const ShapeVector& b) { return a.e0 == b.e0 && a.e == b.e; }
};

ShapeVector shape(const NrtWord& w);

// <v,u>_N = sum_i sum_j v_{ij} u_{i,s+1-j} (per-row reversed dot product).
FieldElement nrt_inner(const NrtWord& v, const NrtWord& u);

// A linear code with canonical generator matrix: the unique RREF basis of its
// row space, rows ordered by pivot column. k = 0 codes carry an empty matrix.
class NrtCode {
public:
    NrtCode(uint32_t q, uint32_t n, uint32_t s, std::vector<gf::Row> rref_rows);

    uint32_t q() const { return q_; }
    uint32_t n() const { return n_; }
    uint32_t s() const { return s_; }
    uint32_t k() const { return k_; }
    uint32_t length() const { return n_ * s_; }

    const std::vector<gf::Row>& gen() const { return gen_; }
    NrtWord gen_word(uint32_t i) const;
    bool same_space(const NrtCode& o) const { return q_ == o.q_ && n_ == o.n_ && s_ == o.s_; }

    Int size() const { return ipow(Int(q_), k_); }

    friend bool operator==(const NrtCode& a, const NrtCode& b) {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.s_ == b.s_ && a.gen_ == b.gen_;
    }
    friend bool operator!=(const NrtCode& a, const NrtCode& b) { return !(a == b); }
    friend bool operator<(const NrtCode& a, const NrtCode& b);

    std::string str() const;

private:
    uint32_t q_, n_, s_, k_;
    std::vector<gf::Row> gen_;
};

NrtCode code_from_rows(uint32_t q, uint32_t n, uint32_t s, const std::vector<NrtWord>& rows);
NrtCode code_from_flat_rows(uint32_t q, uint32_t n, uint32_t s, const std::vector<gf::Row>& rows);
NrtCode zero_code(uint32_t q, uint32_t n, uint32_t s);

// Visits all q^k codewords exactly once. Throws cap_exceeded when q^k > cap.
void enumerate_codewords(const NrtCode& c, uint64_t cap, const std::function<void(const NrtWord&)>& fn);
std::vector<NrtWord> codewords(const NrtCode& c, uint64_t cap = kDefaultEnumCap);

// Dual under <,>_N by exact null-space solve; dim C + dim C^perp = ns.
NrtCode dual_code(const NrtCode& c);

bool is_self_orthogonal(const NrtCode& c);  // C subset of C^perp, i.e. G P G^T = 0
bool is_self_dual(const NrtCode& c);        // self-orthogonal and 2k = ns

struct ParityProfile {
    bool all_even_weight = false;
    // Defined for s = 2 only: every codeword has an even number of rows of
    // weight one and an even number of rows of weight two.
    std::optional<bool> even_rows_weight1_and_2;

    bool even_rows_flag() const {
        if (!even_rows_weight1_and_2)
            throw std::domain_error("parity_profile: the row-count flag is defined only for s = 2");
        return *even_rows_weight1_and_2;
    }
};

ParityProfile parity_profile(const NrtCode& c, uint64_t cap = kDefaultEnumCap);

// Isometries of M_{n,s}(F_q): a row permutation followed by an invertible
// upper-triangular transform per row.
struct NrtIsometry {
    std::vector<uint32_t> perm;            // result row i comes from source row perm[i]
    std::vector<std::vector<uint8_t>> blocks;  // n upper-triangular s x s matrices, row-major
};

// |T_s|^n * n! where |T_s| = (q-1)^s q^{s(s-1)/2}; throws cap_exceeded if the
// count exceeds cap (or overflows).
uint64_t isometry_group_order(uint32_t n, uint32_t s, uint32_t q, uint64_t cap = kDefaultIsoCap);

void for_each_isometry(uint32_t n, uint32_t s, uint32_t q, uint64_t cap,
                       const std::function<void(const NrtIsometry&)>& fn);

NrtWord apply_isometry(const NrtIsometry& iso, const NrtWord& w);

// True iff some isometry maps c1 onto c2. Codes must share (q, n, s).
// The multiset of codeword shapes is compared first as a fast negative filter.
bool codes_equivalent(const NrtCode& c1, const NrtCode& c2, uint64_t iso_cap = kDefaultIsoCap,
                      uint64_t enum_cap = kDefaultEnumCap);

// Multiset {shape exponent vector -> count} over all codewords; an isometry
// invariant of the code.
std::map<std::vector<uint32_t>, uint64_t> shape_distribution(const NrtCode& c, uint64_t cap = kDefaultEnumCap);

// All k-dimensional codes of M_{n,s}(F_q), enumerated as RREF matrices.
void for_each_code_of_dim(uint32_t q, uint32_t n, uint32_t s, uint32_t k,
                          const std::function<void(const NrtCode&)>& fn);
// All linear codes (every k from 0 to ns).
void for_each_code(uint32_t q, uint32_t n, uint32_t s, const std::function<void(const NrtCode&)>& fn);

// Code file format: line 1 "q n s", then one line per generator row with ns
// integers in [0, q). An empty generator section is the zero code. Readers
// canonicalize; writers emit canonical RREF.
NrtCode read_code(std::istream& in);
NrtCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const NrtCode& c);
void write_code_file(const std::string& path, const NrtCode& c);

}  // namespace nrt
