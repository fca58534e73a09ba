#include "nrt/matrix.hpp"

#include <map>
#include <stdexcept>

namespace nrt {

DenseMatrix DenseMatrix::identity(size_t n) {
    DenseMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = QuadElement(1);
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

DenseMatrix DenseMatrix::scale(const QuadElement& s) const {
    DenseMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

QuadElement DenseMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix not square");
    QuadElement t;
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    DenseMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const QuadElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
    DenseMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix diff: dimension mismatch");
    DenseMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

int DenseMatrix::cmp(const DenseMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_ ? -1 : 1;
    if (cols_ != o.cols_) return cols_ < o.cols_ ? -1 : 1;
    for (size_t i = 0; i < e_.size(); ++i)
        if (int c = e_[i].cmp(o.e_[i])) return c;
    return 0;
}

std::string DenseMatrix::str() const {
    std::string out;
    for (size_t i = 0; i < rows_; ++i) {
        out += "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

namespace {

// Fraction-free (Bareiss) determinant over the polynomial ring Q(sqrt2)[L].
// Entries stay polynomial throughout; each step divides exactly by the
// previous pivot. Row swaps flip the sign.
QuadPoly bareiss_det(std::vector<std::vector<QuadPoly>> m) {
    size_t n = m.size();
    if (n == 0) return QuadPoly(QuadElement(1));
    int sign = 1;
    QuadPoly prev(QuadElement(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return QuadPoly();  // singular over the ring
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                QuadPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = QuadPoly::exact_divide(t, prev);
            }
            m[i][k] = QuadPoly();
        }
        prev = m[k][k];
    }
    QuadPoly d = m[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d;
}

}  // namespace

QuadPoly det_poly(const DenseMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("det_poly: matrix not square");
    size_t n = A.rows();
    std::vector<std::vector<QuadPoly>> m(n, std::vector<QuadPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // (I - L*A)[i][j]
            QuadPoly cell = QuadPoly::monomial(-A.at(i, j), 1);
            if (i == j) cell = cell + QuadPoly(QuadElement(1));
            m[i][j] = cell;
        }
    return bareiss_det(std::move(m));
}

QuadElement det(const DenseMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("det: matrix not square");
    size_t n = A.rows();
    std::vector<std::vector<QuadPoly>> m(n, std::vector<QuadPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = QuadPoly(A.at(i, j));
    QuadPoly d = bareiss_det(std::move(m));
    return d.is_zero() ? QuadElement() : d.coeff(0);
}

MultiPoly substitute_linear(const MultiPoly& f, const DenseMatrix& M) {
    if (!M.is_square() || M.rows() != f.vars())
        throw std::invalid_argument("substitute_linear: matrix side must equal variable count");
    uint32_t m = f.vars();

    // Linear forms L_i = (M Z)_i.
    std::vector<MultiPoly> forms;
    forms.reserve(m);
    for (uint32_t i = 0; i < m; ++i) {
        MultiPoly L(m);
        for (uint32_t j = 0; j < m; ++j) {
            if (M.at(i, j).is_zero()) continue;
            Exponents e(m, 0);
            e[j] = 1;
            L.add_term(e, M.at(i, j));
        }
        forms.push_back(std::move(L));
    }

    // Powers of each form are cached per call; exponents in this library stay
    // small (degree <= ~8), so repeated squaring is not worth the code.
    std::vector<std::map<uint32_t, MultiPoly>> powers(m);
    auto form_power = [&](uint32_t i, uint32_t e) -> const MultiPoly& {
        auto it = powers[i].find(e);
        if (it != powers[i].end()) return it->second;
        MultiPoly p = e == 0 ? MultiPoly::constant(m, QuadElement(1)) : forms[i].pow(e);
        return powers[i].emplace(e, std::move(p)).first->second;
    };

    MultiPoly out(m);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly t = MultiPoly::constant(m, c);
        for (uint32_t i = 0; i < m; ++i)
            if (e[i] > 0) t = t * form_power(i, e[i]);
        out += t;
    }
    return out;
}

}  // namespace nrt
