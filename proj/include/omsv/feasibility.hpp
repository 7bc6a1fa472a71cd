#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "omsv/rational.hpp"

namespace omsv {

/// Homogeneous linear constraint over Q^m: coeffs . x = 0 or coeffs . x > 0.
struct LinearConstraint {
    enum class Rel { Eq, Gt };
    std::vector<Rational> coeffs;
    Rel rel = Rel::Gt;
};

namespace detail {

struct EliminationRecord {
    std::size_t var = 0;
    // x_var > l for every l in lowers, x_var < u for every u in uppers;
    // bound expressions range over the variables before `var`.
    std::vector<std::vector<Rational>> lowers;
    std::vector<std::vector<Rational>> uppers;
};

[[nodiscard]] inline Rational evaluate(const std::vector<Rational>& expr, const std::vector<Rational>& point) {
    Rational acc(0);
    for (std::size_t t = 0; t < expr.size(); ++t) acc += expr[t] * point[t];
    return acc;
}

}  // namespace detail

/// Exact Fourier-Motzkin solver for homogeneous systems of equalities and
/// strict inequalities. Equalities are removed first by Gaussian
/// substitution; the strict system is then eliminated variable by variable
/// (a pair of bounds l < x_t < u yields u - l > 0). Strictness makes the
/// derived bounds reusable for point extraction: back-substituting midpoints
/// always lands strictly inside. Returns a rational solution, or nullopt if
/// the system is infeasible.
[[nodiscard]] inline std::optional<std::vector<Rational>> feasible_point(
    const std::vector<LinearConstraint>& constraints, std::size_t num_vars) {
    using Rel = LinearConstraint::Rel;
    for (const LinearConstraint& c : constraints)
        if (c.coeffs.size() != num_vars) throw std::invalid_argument("feasibility: constraint width mismatch");

    // Gaussian elimination on the equalities; pivot columns get expressed in
    // terms of the remaining variables.
    std::vector<std::vector<Rational>> eqs;
    for (const LinearConstraint& c : constraints)
        if (c.rel == Rel::Eq) eqs.push_back(c.coeffs);
    std::vector<std::pair<std::size_t, std::vector<Rational>>> pivot_rows;  // (pivot var, fully reduced row)
    std::vector<bool> is_pivot(num_vars, false);
    {
        std::vector<std::size_t> pivot_cols;
        std::size_t next_row = 0;
        for (std::size_t col = 0; col < num_vars && next_row < eqs.size(); ++col) {
            std::size_t pivot = next_row;
            while (pivot < eqs.size() && eqs[pivot][col] == 0) ++pivot;
            if (pivot == eqs.size()) continue;
            std::swap(eqs[pivot], eqs[next_row]);
            const Rational lead = eqs[next_row][col];
            for (Rational& x : eqs[next_row]) x /= lead;
            for (std::size_t r = 0; r < eqs.size(); ++r) {
                if (r == next_row || eqs[r][col] == 0) continue;
                const Rational factor = eqs[r][col];
                for (std::size_t t = 0; t < num_vars; ++t) eqs[r][t] -= factor * eqs[next_row][t];
            }
            pivot_cols.push_back(col);
            is_pivot[col] = true;
            ++next_row;
        }
        // Rows keep changing while later pivots are cleared; snapshot only
        // after the elimination has fully reduced them.
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) pivot_rows.emplace_back(pivot_cols[r], eqs[r]);
    }
    std::vector<std::size_t> free_vars;
    for (std::size_t t = 0; t < num_vars; ++t)
        if (!is_pivot[t]) free_vars.push_back(t);

    // Rewrite the strict constraints over the free variables only:
    // x_pivot = -sum(free coefficients of the pivot row) * x_free.
    std::vector<std::vector<Rational>> strict;
    for (const LinearConstraint& c : constraints) {
        if (c.rel != Rel::Gt) continue;
        std::vector<Rational> reduced(free_vars.size(), Rational(0));
        for (std::size_t f = 0; f < free_vars.size(); ++f) reduced[f] = c.coeffs[free_vars[f]];
        for (const auto& [pv, row] : pivot_rows) {
            const Rational& coeff = c.coeffs[pv];
            if (coeff == 0) continue;
            for (std::size_t f = 0; f < free_vars.size(); ++f) reduced[f] -= coeff * row[free_vars[f]];
        }
        strict.push_back(std::move(reduced));
    }

    // Fourier-Motzkin elimination from the last free variable down.
    std::vector<detail::EliminationRecord> records;
    for (std::size_t remaining = free_vars.size(); remaining > 0; --remaining) {
        const std::size_t t = remaining - 1;
        detail::EliminationRecord record;
        record.var = t;
        std::vector<std::vector<Rational>> passed;
        for (std::vector<Rational>& con : strict) {
            const Rational a = con[t];
            if (a == 0) {
                con.resize(t);
                passed.push_back(std::move(con));
                continue;
            }
            // a * x_t + rest > 0  <=>  x_t > -rest/a (a > 0), x_t < -rest/a (a < 0)
            std::vector<Rational> bound(t, Rational(0));
            for (std::size_t u = 0; u < t; ++u) bound[u] = -con[u] / a;
            if (a > 0) record.lowers.push_back(std::move(bound));
            else record.uppers.push_back(std::move(bound));
        }
        for (const auto& lower : record.lowers)
            for (const auto& upper : record.uppers) {
                std::vector<Rational> diff(t, Rational(0));
                for (std::size_t u = 0; u < t; ++u) diff[u] = upper[u] - lower[u];
                passed.push_back(std::move(diff));
            }
        strict = std::move(passed);
        // A fully cancelled row reads 0 > 0: infeasible.
        for (const auto& con : strict) {
            bool all_zero = true;
            for (const Rational& x : con)
                if (x != 0) { all_zero = false; break; }
            if (all_zero) return std::nullopt;
        }
        records.push_back(std::move(record));
    }
    if (!strict.empty()) return std::nullopt;  // 0 > 0 with no variables left

    // Back-substitution: pick each free variable strictly inside its bounds.
    std::vector<Rational> free_point(free_vars.size(), Rational(0));
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        std::optional<Rational> max_lower;
        std::optional<Rational> min_upper;
        for (const auto& expr : it->lowers) {
            Rational value = detail::evaluate(expr, free_point);
            if (!max_lower || value > *max_lower) max_lower = std::move(value);
        }
        for (const auto& expr : it->uppers) {
            Rational value = detail::evaluate(expr, free_point);
            if (!min_upper || value < *min_upper) min_upper = std::move(value);
        }
        Rational chosen(0);
        if (max_lower && min_upper) chosen = (*max_lower + *min_upper) / 2;
        else if (max_lower) chosen = *max_lower + 1;
        else if (min_upper) chosen = *min_upper - 1;
        free_point[it->var] = std::move(chosen);
    }

    std::vector<Rational> point(num_vars, Rational(0));
    for (std::size_t f = 0; f < free_vars.size(); ++f) point[free_vars[f]] = free_point[f];
    for (const auto& [pv, row] : pivot_rows) {
        Rational value(0);
        for (std::size_t f = 0; f < free_vars.size(); ++f) value -= row[free_vars[f]] * free_point[f];
        point[pv] = std::move(value);
    }
    return point;
}

[[nodiscard]] inline bool strictly_feasible(const std::vector<LinearConstraint>& constraints,
                                            std::size_t num_vars) {
    return feasible_point(constraints, num_vars).has_value();
}

}  // namespace omsv
