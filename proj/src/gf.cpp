#include "nrt/gf.hpp"

#include <algorithm>

namespace nrt {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldElement FieldElement::inverse() const {
    if (v_ == 0) throw std::domain_error("FieldElement: inversion of zero");
    return {gf::inv_mod(v_, p_), p_};
}

namespace gf {

uint32_t inv_mod(uint32_t a, uint32_t p) {
    if (a % p == 0) throw std::domain_error("inv_mod: inversion of zero");
    // Extended Euclid.
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

std::vector<size_t> rref(std::vector<Row>& m, uint32_t p) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        uint32_t inv = inv_mod(m[row][col], p);
        for (size_t j = col; j < cols; ++j) m[row][j] = mul(m[row][j], static_cast<uint8_t>(inv), p);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            uint8_t f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[row][j], p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);  // drop zero rows
    return pivots;
}

std::vector<Row> nullspace(const std::vector<Row>& m_in, size_t cols, uint32_t p) {
    std::vector<Row> m = m_in;
    std::vector<size_t> pivots = rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<Row> basis;
    for (size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        Row v(cols, 0);
        v[j] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = neg(m[i][j], p);
        basis.push_back(std::move(v));
    }
    rref(basis, p);  // canonical form of the kernel
    return basis;
}

}  // namespace gf

}  // namespace nrt
