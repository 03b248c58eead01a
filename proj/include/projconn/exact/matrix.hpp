#pragma once

#include <cstddef>
#include <vector>

#include "projconn/exact/error.hpp"
#include "projconn/exact/poly.hpp"
#include "projconn/exact/rat.hpp"

namespace projconn {

// Dense rectangular matrix over an exact ring (Rat or PolyMV).
template <class T>
class Mat {
public:
    Mat(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t n, const T& zero, const T& one) {
        Mat m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
        const T zero = a.at(0, 0) - a.at(0, 0);
        Mat r(a.rows_, b.cols_, zero);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
        return r;
    }

    // Exact determinant by cofactor expansion along the first row.  The
    // matrices here are small (≤ 6×6); clarity over asymptotics.
    T det() const {
        if (rows_ != cols_) throw ShapeError("determinant of a non-square matrix");
        if (rows_ == 0) throw ShapeError("determinant of an empty matrix");
        std::vector<std::size_t> cols(cols_);
        for (std::size_t j = 0; j < cols_; ++j) cols[j] = j;
        return det_rec(0, cols);
    }

private:
    T det_rec(std::size_t row, const std::vector<std::size_t>& cols) const {
        if (cols.size() == 1) return at(row, cols[0]);
        T acc = at(row, cols[0]) - at(row, cols[0]); // zero of the right shape
        std::vector<std::size_t> sub(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::size_t k = 0;
            for (std::size_t l = 0; l < cols.size(); ++l)
                if (l != j) sub[k++] = cols[l];
            T term = at(row, cols[j]) * det_rec(row + 1, sub);
            if (j % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using MatR = Mat<PolyMV>; // polynomial entries
using MatQ = Mat<Rat>;    // scalar entries

// Solve A x = b over the rationals (A square).  Throws DomainError
// "singular-system" when A is singular.
inline std::vector<Rat> solve_linear(MatQ a, std::vector<Rat> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw ShapeError("linear solve shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw DomainError("singular-system", "linear system is singular");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            std::swap(b[piv], b[col]);
        }
        const Rat inv = a.at(col, col).inverse();
        for (std::size_t j = col; j < n; ++j) a.at(col, j) *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            const Rat f = a.at(i, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
            b[i] -= f * b[col];
        }
    }
    return b;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(MatQ& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        const Rat inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            const Rat f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(MatQ a) { return rref(a).size(); }

// Basis of the right null space of A, one vector per free column.
inline std::vector<std::vector<Rat>> kernel_basis(MatQ a) {
    const std::vector<std::size_t> pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(a.cols(), Rat(0));
        v[free] = Rat(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace projconn
