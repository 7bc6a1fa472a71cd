#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "omsv/feasibility.hpp"
#include "omsv/matrix.hpp"
#include "omsv/sign_vector.hpp"
#include "omsv/subsets.hpp"
#include "omsv/subspace.hpp"

namespace omsv {

/// Independent brute-force ground truth. Deliberately rebuilt from first
/// principles: nothing here touches the chirotope, cocircuit, or
/// perturbation code paths.
namespace oracle {

struct OracleBudget {
    int max_n = 8;
};

inline void check_budget(int n, const OracleBudget& budget) {
    if (n > budget.max_n)
        throw std::runtime_error("oracle: budget exceeded (n = " + std::to_string(n) +
                                 " > max_n = " + std::to_string(budget.max_n) + ")");
}

/// Exactly the sign vectors realized by vectors of V, decided per candidate
/// by strict/equality feasibility over the rationals. A candidate tau is
/// realized iff some coefficient vector x has sign((x B)_i) = tau_i for the
/// RREF basis B.
[[nodiscard]] inline std::set<SignVector> covectors_of_subspace(const Subspace& v,
                                                                const OracleBudget& budget = {}) {
    const int n = v.ambient();
    const int k = v.dim();
    check_budget(n, budget);
    std::set<SignVector> out;
    out.insert(SignVector::zero(n));
    if (k == 0) return out;
    std::vector<std::int8_t> candidate(static_cast<std::size_t>(n), -1);
    const auto advance = [&]() {
        for (std::size_t t = candidate.size(); t-- > 0;) {
            if (candidate[t] < 1) { ++candidate[t]; return true; }
            candidate[t] = -1;
        }
        return false;
    };
    do {
        const SignVector tau{std::vector<std::int8_t>(candidate)};
        if (tau.is_zero()) continue;
        // Realization is symmetric under negation; test one representative.
        bool first_is_negative = false;
        for (std::int8_t s : candidate) {
            if (s == 0) continue;
            first_is_negative = (s < 0);
            break;
        }
        if (first_is_negative) continue;
        std::vector<LinearConstraint> constraints;
        constraints.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            LinearConstraint con;
            con.coeffs.resize(static_cast<std::size_t>(k));
            for (int t = 0; t < k; ++t) con.coeffs[static_cast<std::size_t>(t)] = v.basis()(t, i - 1);
            const int s = tau.at(i);
            if (s == 0) con.rel = LinearConstraint::Rel::Eq;
            else {
                con.rel = LinearConstraint::Rel::Gt;
                if (s < 0)
                    for (Rational& x : con.coeffs) x = -x;
            }
            constraints.push_back(std::move(con));
        }
        if (strictly_feasible(constraints, static_cast<std::size_t>(k))) {
            out.insert(tau);
            out.insert(tau.negated());
        }
    } while (advance());
    return out;
}

/// Maximum of var over all covectors of V (-1 for the zero subspace).
[[nodiscard]] inline int max_var_brute(const Subspace& v, const OracleBudget& budget = {}) {
    int best = -1;
    for (const SignVector& x : covectors_of_subspace(v, budget)) best = std::max(best, var(x));
    return best;
}

/// Maximum of varbar over the nonzero covectors of V (-1 when there are none).
[[nodiscard]] inline int max_varbar_brute(const Subspace& v, const OracleBudget& budget = {}) {
    int best = -1;
    for (const SignVector& x : covectors_of_subspace(v, budget)) {
        if (x.is_zero()) continue;
        best = std::max(best, varbar(x));
    }
    return best;
}

/// Nonzero-minor index sets of the input matrix itself (not its RREF).
[[nodiscard]] inline std::vector<Subset> matroid_brute(const ExactMatrix& m) {
    const int k = m.rows();
    std::vector<Subset> out;
    Subset I = first_subset(k);
    do {
        if (determinant(m.columns(I)) != 0) out.push_back(I);
    } while (next_subset(I, m.cols()));
    return out;
}

/// Ground truth for amplituhedron well-definedness on the TNN Grassmannian:
/// every nonzero kernel covector changes sign at least k times.
[[nodiscard]] inline bool amplituhedron_brute(const ExactMatrix& z, int k,
                                              const OracleBudget& budget = {}) {
    for (const SignVector& x : covectors_of_subspace(kernel(z), budget)) {
        if (x.is_zero()) continue;
        if (var(x) < k) return false;
    }
    return true;
}

}  // namespace oracle
}  // namespace omsv
