#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "omsv/rational.hpp"
#include "omsv/subsets.hpp"

namespace omsv {

/// Dense rational matrix. Dimensions are fixed at construction.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
    }

    [[nodiscard]] static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols = -1) {
        const int r = static_cast<int>(rows.size());
        int c = cols;
        if (c < 0) c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
        ExactMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw std::invalid_argument("matrix: ragged rows");
            for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    [[nodiscard]] static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    [[nodiscard]] Rational& operator()(int i, int j) { return entries_[index(i, j)]; }
    [[nodiscard]] const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    /// Submatrix on all rows and the columns in I (1-based, sorted).
    [[nodiscard]] ExactMatrix columns(const Subset& I) const {
        ExactMatrix m(rows_, static_cast<int>(I.size()));
        for (int i = 0; i < rows_; ++i)
            for (std::size_t t = 0; t < I.size(); ++t) m(i, static_cast<int>(t)) = (*this)(i, I[t] - 1);
        return m;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    [[nodiscard]] std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix: index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

/// Determinant by fraction-free Bareiss elimination. The empty matrix has
/// determinant 1.
[[nodiscard]] inline Rational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int q = m.rows();
    if (q == 0) return Rational(1);
    ExactMatrix a = m;
    Rational prev(1);
    int sign = 1;
    for (int col = 0; col + 1 < q; ++col) {
        int pivot_row = -1;
        for (int i = col; i < q; ++i) {
            if (a(i, col) != 0) { pivot_row = i; break; }
        }
        if (pivot_row < 0) return Rational(0);
        if (pivot_row != col) {
            a.swap_rows(pivot_row, col);
            sign = -sign;
        }
        for (int i = col + 1; i < q; ++i) {
            for (int j = col + 1; j < q; ++j)
                a(i, j) = (a(i, j) * a(col, col) - a(i, col) * a(col, j)) / prev;
            a(i, col) = 0;
        }
        prev = a(col, col);
    }
    return sign > 0 ? a(q - 1, q - 1) : -a(q - 1, q - 1);
}

/// Dot product of row a of `m` with row b of `w`.
[[nodiscard]] inline Rational row_dot(const ExactMatrix& m, int a, const ExactMatrix& w, int b) {
    if (m.cols() != w.cols()) throw std::invalid_argument("row_dot: width mismatch");
    Rational acc(0);
    for (int j = 0; j < m.cols(); ++j) acc += m(a, j) * w(b, j);
    return acc;
}

}  // namespace omsv
