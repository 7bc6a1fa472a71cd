#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "omsv/chirotope.hpp"
#include "omsv/plucker.hpp"
#include "omsv/sign_vector.hpp"
#include "omsv/subsets.hpp"
#include "omsv/subspace.hpp"

namespace omsv {

/// Verdict of a chirotope sign-variation criterion. When the bound fails,
/// carries the first offending (k-1)-subset in lexicographic order together
/// with its sign sequence (chi(I u {i}))_{i in [n] \ I}.
struct CriterionReport {
    bool holds = true;
    int bound_checked = 0;
    std::optional<Subset> witness_subset;
    std::optional<SignVector> witness_sequence;
};

/// The sequence (chi(I u {i}))_{i in [n] \ I}, i increasing; sorted-set
/// chirotope values, no permutation sign.
[[nodiscard]] inline SignVector chirotope_sequence(const Chirotope& c, const Subset& I) {
    std::vector<std::int8_t> entries;
    entries.reserve(static_cast<std::size_t>(c.n() - c.k() + 1));
    for (int i = 1; i <= c.n(); ++i) {
        if (subset_contains(I, i)) continue;
        entries.push_back(static_cast<std::int8_t>(c.at(subset_with(I, i))));
    }
    return SignVector(std::move(entries));
}

/// Necessary condition for max var over covectors <= m (exact when the
/// chirotope is uniform): every (k-1)-subset sequence has var <= m-k+1.
[[nodiscard]] inline CriterionReport var_bound_necessary(const Chirotope& c, int m) {
    if (m < c.k() - 1) throw std::invalid_argument("criterion: m < k-1");
    CriterionReport report;
    report.bound_checked = m;
    Subset I = first_subset(c.k() - 1);
    do {
        SignVector seq = chirotope_sequence(c, I);
        if (var(seq) > m - c.k() + 1) {
            report.holds = false;
            report.witness_subset = I;
            report.witness_sequence = std::move(seq);
            return report;
        }
    } while (next_subset(I, c.n()));
    return report;
}

/// Exact criterion: max varbar over nonzero covectors <= m iff every
/// (k-1)-subset whose sequence is nonzero has varbar(sequence) <= m-k+1.
/// All-zero sequences (I does not extend to a basis) are skipped.
[[nodiscard]] inline CriterionReport varbar_bound_iff(const Chirotope& c, int m) {
    if (m < c.k() - 1) throw std::invalid_argument("criterion: m < k-1");
    CriterionReport report;
    report.bound_checked = m;
    Subset I = first_subset(c.k() - 1);
    do {
        SignVector seq = chirotope_sequence(c, I);
        if (seq.is_zero()) continue;
        if (varbar(seq) > m - c.k() + 1) {
            report.holds = false;
            report.witness_subset = I;
            report.witness_sequence = std::move(seq);
            return report;
        }
    } while (next_subset(I, c.n()));
    return report;
}

/// Every basis carries the same orientation.
[[nodiscard]] inline bool is_positively_oriented(const Chirotope& c) {
    int seen = 0;
    for (std::int8_t s : c.orientation()) {
        if (s == 0) continue;
        if (seen == 0) seen = s;
        else if (s != seen) return false;
    }
    return true;
}

/// Positively oriented and uniform.
[[nodiscard]] inline bool is_alternating(const Chirotope& c) {
    return is_positively_oriented(c) && is_uniform(c);
}

/// All nonzero Plucker coordinates share one sign.
[[nodiscard]] inline bool is_tnn(const Subspace& v) {
    int seen = 0;
    const PluckerMap minors = maximal_minors(v);
    for (const Rational& x : minors.values()) {
        const int s = sign_of(x);
        if (s == 0) continue;
        if (seen == 0) seen = s;
        else if (s != seen) return false;
    }
    return true;
}

/// All Plucker coordinates nonzero with one sign.
[[nodiscard]] inline bool is_tp(const Subspace& v) {
    int seen = 0;
    const PluckerMap minors = maximal_minors(v);
    for (const Rational& x : minors.values()) {
        const int s = sign_of(x);
        if (s == 0) return false;
        if (seen == 0) seen = s;
        else if (s != seen) return false;
    }
    return true;
}

}  // namespace omsv
