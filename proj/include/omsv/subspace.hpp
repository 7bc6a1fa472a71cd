#pragma once

#include <stdexcept>
#include <vector>

#include "omsv/matrix.hpp"
#include "omsv/rational.hpp"
#include "omsv/sign_vector.hpp"
#include "omsv/subsets.hpp"

namespace omsv {

/// A linear subspace of Q^n in canonical form: the unique reduced
/// row echelon basis plus its pivot columns. Two subspaces are equal iff
/// their RREF bases are equal entrywise.
class Subspace {
public:
    Subspace() = default;
    Subspace(ExactMatrix rref_basis, Subset pivots)
        : basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {}

    [[nodiscard]] int dim() const { return basis_.rows(); }
    [[nodiscard]] int ambient() const { return basis_.cols(); }
    [[nodiscard]] const ExactMatrix& basis() const { return basis_; }
    [[nodiscard]] const Subset& pivots() const { return pivots_; }

    /// Exact membership test against the RREF basis.
    [[nodiscard]] bool contains(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != ambient()) throw std::invalid_argument("contains: length mismatch");
        // Coordinates w.r.t. the RREF basis are read off at the pivots.
        std::vector<Rational> residual = v;
        for (int t = 0; t < dim(); ++t) {
            const Rational coeff = residual[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(t)] - 1)];
            if (coeff == 0) continue;
            for (int j = 0; j < ambient(); ++j) residual[static_cast<std::size_t>(j)] -= coeff * basis_(t, j);
        }
        for (const Rational& x : residual)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    ExactMatrix basis_;
    Subset pivots_;
};

/// Canonical row space of m: Gauss-Jordan to RREF, zero rows dropped.
[[nodiscard]] inline Subspace row_reduce(const ExactMatrix& m) {
    ExactMatrix a = m;
    const int rows = a.rows();
    const int cols = a.cols();
    Subset pivots;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot_row = -1;
        for (int i = rank; i < rows; ++i) {
            if (a(i, col) != 0) { pivot_row = i; break; }
        }
        if (pivot_row < 0) continue;
        a.swap_rows(pivot_row, rank);
        const Rational pivot = a(rank, col);
        for (int j = 0; j < cols; ++j) a(rank, j) /= pivot;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a(i, col) == 0) continue;
            const Rational factor = a(i, col);
            for (int j = 0; j < cols; ++j) a(i, j) -= factor * a(rank, j);
        }
        pivots.push_back(col + 1);
        ++rank;
    }
    ExactMatrix basis(rank, cols);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < cols; ++j) basis(i, j) = a(i, j);
    return Subspace(std::move(basis), std::move(pivots));
}

/// Null space of z, as a canonical subspace of dimension n - rank(z).
[[nodiscard]] inline Subspace kernel(const ExactMatrix& z) {
    const Subspace row_space = row_reduce(z);
    const int n = z.cols();
    const int rank = row_space.dim();
    const Subset& pivots = row_space.pivots();
    const Subset free_cols = subset_complement(pivots, n);
    ExactMatrix basis(static_cast<int>(free_cols.size()), n);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const int f = free_cols[t];
        basis(static_cast<int>(t), f - 1) = 1;
        for (int s = 0; s < rank; ++s)
            basis(static_cast<int>(t), pivots[static_cast<std::size_t>(s)] - 1) = -row_space.basis()(s, f - 1);
    }
    return row_reduce(basis);
}

/// V-perp; basis rows of the output are orthogonal to those of the input.
[[nodiscard]] inline Subspace orthogonal_complement(const Subspace& v) {
    return kernel(v.basis());
}

/// Image of V under negating even-indexed coordinates; an involution.
[[nodiscard]] inline Subspace alt_twist(const Subspace& v) {
    ExactMatrix m = v.basis();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 1; j < m.cols(); j += 2) m(i, j) = -m(i, j);
    return row_reduce(m);
}

/// Row span of [x^(j) | ... | x^(n) | (-1)^(k-1) x^(1) | ... | (-1)^(k-1) x^(j-1)].
[[nodiscard]] inline Subspace cyclic_shift(const Subspace& v, int j) {
    const int n = v.ambient();
    const int k = v.dim();
    if (j < 1 || j > n) throw std::invalid_argument("cyclic_shift: shift index outside [n]");
    const bool negate_wrapped = (k % 2 == 0);  // (-1)^(k-1) = -1 iff k even
    ExactMatrix m(k, n);
    for (int col = 0; col < n; ++col) {
        const int src = (j - 1 + col) % n;
        const bool wrapped = (j - 1 + col) >= n;
        for (int i = 0; i < k; ++i) {
            m(i, col) = v.basis()(i, src);
            if (wrapped && negate_wrapped) m(i, col) = -m(i, col);
        }
    }
    return row_reduce(m);
}

/// Sign vector of a rational vector.
[[nodiscard]] inline SignVector sign_vector_of(const std::vector<Rational>& v) {
    std::vector<std::int8_t> entries;
    entries.reserve(v.size());
    for (const Rational& x : v) entries.push_back(static_cast<std::int8_t>(sign_of(x)));
    return SignVector(std::move(entries));
}

}  // namespace omsv
