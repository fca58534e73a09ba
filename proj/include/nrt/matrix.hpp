#pragma once

// Dense matrices over Q(sqrt2), the characteristic-polynomial-style
// determinant det(I - lambda*A) computed by fraction-free elimination, and
// the linear change-of-variables action on multivariate polynomials.

#include <cstddef>
#include <string>
#include <vector>

#include "nrt/multipoly.hpp"
#include "nrt/quad.hpp"
#include "nrt/unipoly.hpp"

namespace nrt {

class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static DenseMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    QuadElement& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const QuadElement& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    DenseMatrix transpose() const;
    DenseMatrix scale(const QuadElement& s) const;
    QuadElement trace() const;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

    // Total order for container keys (dimensions, then entries lexicographically).
    int cmp(const DenseMatrix& o) const;
    friend bool operator<(const DenseMatrix& a, const DenseMatrix& b) { return a.cmp(b) < 0; }

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<QuadElement> e_;
};

// det(I - lambda*A) as an exact polynomial in lambda, by Bareiss-style
// fraction-free elimination over the polynomial ring. det_poly(A)(0) = 1.
QuadPoly det_poly(const DenseMatrix& A);

// Scalar determinant (same elimination, constant entries).
QuadElement det(const DenseMatrix& A);

// f(M Z): evaluates f at the vector of linear forms given by the rows of M.
// M must be square with side equal to f's variable count; homogeneous degree
// is preserved.
MultiPoly substitute_linear(const MultiPoly& f, const DenseMatrix& M);

}  // namespace nrt
