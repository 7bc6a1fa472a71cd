#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "omsv/amplituhedron.hpp"
#include "omsv/matrix.hpp"
#include "omsv/perturbation.hpp"
#include "omsv/rational.hpp"
#include "omsv/sign_vector.hpp"
#include "omsv/subspace.hpp"

namespace omsv::testing {

/// Brute-force varbar: maximum var over all completions of the zeros.
/// Independent of the library's DP.
inline int varbar_brute(const SignVector& x) {
    std::vector<int> zero_positions;
    for (int e = 1; e <= x.size(); ++e)
        if (x.at(e) == 0) zero_positions.push_back(e);
    int best = -1;
    const std::size_t total = std::size_t{1} << zero_positions.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        SignVector filled = x;
        for (std::size_t t = 0; t < zero_positions.size(); ++t)
            filled.set(zero_positions[t], (mask >> t) & 1 ? 1 : -1);
        best = std::max(best, var(filled));
    }
    return best;
}

inline Rational random_rational(std::mt19937_64& rng, int max_abs_num = 5, int max_den = 3) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
    return m;
}

/// Random subspace of dimension exactly k (resamples until full rank).
inline Subspace random_subspace(std::mt19937_64& rng, int k, int n) {
    for (;;) {
        const Subspace v = row_reduce(random_matrix(rng, k, n));
        if (v.dim() == k) return v;
    }
}

inline SignVector random_sign_vector(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> entry(-1, 1);
    std::vector<std::int8_t> entries(static_cast<std::size_t>(n));
    for (auto& e : entries) e = static_cast<std::int8_t>(entry(rng));
    return SignVector(std::move(entries));
}

/// Random totally nonnegative subspace: seeded from an interval extension,
/// a Vandermonde stratum, or a coordinate pattern, then walked with random
/// monotone adjacent perturbation steps (which preserve total
/// nonnegativity).
inline Subspace random_tnn_subspace(std::mt19937_64& rng, int k, int n) {
    std::uniform_int_distribution<int> seed_kind(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    Subspace v;
    switch (seed_kind(rng)) {
        case 0: {
            // Interval extension of a random vector with var <= k-1.
            for (;;) {
                std::vector<Rational> vec(static_cast<std::size_t>(n));
                bool nonzero = false;
                for (auto& x : vec) {
                    x = random_rational(rng, 3, 1);
                    if (x != 0) nonzero = true;
                }
                if (!nonzero) continue;
                if (var(sign_vector_of(vec)) > k - 1) continue;
                v = extend_nonneg(vec, k);
                break;
            }
            break;
        }
        case 1: {
            // Vandermonde with random strictly increasing rational nodes.
            std::uniform_int_distribution<int> gap_num(1, 4);
            ExactMatrix m(k, n);
            Rational node(0);
            for (int i = 0; i < n; ++i) {
                node += make_rational(gap_num(rng), 2);
                Rational power(1);
                for (int row = 0; row < k; ++row) {
                    m(row, i) = power;
                    power *= node;
                }
            }
            v = row_reduce(m);
            break;
        }
        default: {
            // Nonnegative echelon pattern: identity on random pivot columns,
            // nonnegative entries allowed only past the final pivot.
            std::vector<int> cols(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
            std::shuffle(cols.begin(), cols.end(), rng);
            Subset pivots(cols.begin(), cols.begin() + k);
            std::sort(pivots.begin(), pivots.end());
            ExactMatrix m(k, n);
            for (int t = 0; t < k; ++t) m(t, pivots[static_cast<std::size_t>(t)] - 1) = 1;
            std::uniform_int_distribution<int> extra(0, 2);
            for (int j = pivots.back(); j < n; ++j) m(k - 1, j) += extra(rng);
            v = row_reduce(m);
            break;
        }
    }
    // Monotone walk.
    if (n < 2) return v;
    std::uniform_int_distribution<int> steps(0, 2 * n);
    std::uniform_int_distribution<int> pos(1, n - 1);
    const int walk = steps(rng);
    for (int t = 0; t < walk; ++t) {
        const int i = pos(rng);
        const PerturbationStep step =
            coin(rng) ? PerturbationStep{i, i + 1, +1} : PerturbationStep{i + 1, i, +1};
        v = realize_step(v, step).first;
    }
    return v;
}

/// True iff b = c * a entrywise for one nonzero rational constant c.
inline bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) return false;
    std::optional<Rational> factor;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if ((a[t] == 0) != (b[t] == 0)) return false;
        if (a[t] == 0) continue;
        Rational c = b[t] / a[t];
        if (factor && c != *factor) return false;
        factor = std::move(c);
    }
    return factor.has_value() || a.empty();
}

}  // namespace omsv::testing
