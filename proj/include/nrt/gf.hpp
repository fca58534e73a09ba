#pragma once

// Prime fields GF(p). FieldElement is the checked public scalar; rows of
// codes and codewords are stored as raw uint8_t vectors with the modulus
// carried by the owning object, with the helpers below doing the mod-p
// linear algebra (RREF, null space).

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nrt {

bool is_prime(uint32_t n);

class FieldElement {
public:
    FieldElement(uint32_t value, uint32_t p) : v_(value), p_(p) {
        if (!is_prime(p)) throw std::domain_error("FieldElement: modulus " + std::to_string(p) + " is not prime");
        if (value >= p) throw std::invalid_argument("FieldElement: value out of range");
    }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
    FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {(a.v_ + b.v_) % a.p_, a.p_};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        return {static_cast<uint32_t>((uint64_t(a.v_) * b.v_) % a.p_), a.p_};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    void check(const FieldElement& o) const {
        if (p_ != o.p_) throw std::invalid_argument("FieldElement: modulus mismatch");
    }
    uint32_t v_, p_;
};

namespace gf {

using Row = std::vector<uint8_t>;

uint32_t inv_mod(uint32_t a, uint32_t p);

inline uint8_t add(uint8_t a, uint8_t b, uint32_t p) { return static_cast<uint8_t>((a + uint32_t(b)) % p); }
inline uint8_t sub(uint8_t a, uint8_t b, uint32_t p) { return static_cast<uint8_t>((a + p - uint32_t(b)) % p); }
inline uint8_t mul(uint8_t a, uint8_t b, uint32_t p) { return static_cast<uint8_t>((uint32_t(a) * b) % p); }
inline uint8_t neg(uint8_t a, uint32_t p) { return a == 0 ? 0 : static_cast<uint8_t>(p - a); }

// In-place reduced row echelon form; returns the pivot columns in order.
// Zero rows are removed.
std::vector<size_t> rref(std::vector<Row>& m, uint32_t p);

// Basis of {x : M x = 0} for M given by rows over GF(p), cols columns.
// Returned rows are themselves in RREF (canonical).
std::vector<Row> nullspace(const std::vector<Row>& m, size_t cols, uint32_t p);

}  // namespace gf

}  // namespace nrt
