#pragma once

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "omsv/chirotope.hpp"
#include "omsv/sign_vector.hpp"
#include "omsv/subsets.hpp"

namespace omsv {

/// Minimal-support sign vectors of an oriented matroid, closed under
/// negation, sorted.
struct CocircuitSet {
    int n = 0;
    std::vector<SignVector> cocircuits;
};

/// Cocircuits from the chirotope via the pivoting property: for each
/// (k-1)-subset I that extends to a basis, C_j = chi(i_1,...,i_{k-1}, j) for
/// j outside I and C_j = 0 on I. Individual cocircuit signs are an artifact
/// convention (first nonzero entry +); consumers must rely on the pivoting
/// relation, not on stored signs.
[[nodiscard]] inline CocircuitSet cocircuits_of(const Chirotope& c) {
    const int n = c.n();
    const int k = c.k();
    CocircuitSet out;
    out.n = n;
    if (k == 0) return out;
    std::set<SignVector> normalized;
    Subset I = first_subset(k - 1);
    do {
        SignVector candidate = SignVector::zero(n);
        bool extends = false;
        for (int j = 1; j <= n; ++j) {
            if (subset_contains(I, j)) continue;
            std::vector<int> tuple(I.begin(), I.end());
            tuple.push_back(j);
            const int value = c.eval(tuple);
            if (value != 0) extends = true;
            candidate.set(j, value);
        }
        if (!extends) continue;
        // Normalize so the first nonzero entry is +, then dedupe.
        for (int e = 1; e <= n; ++e) {
            const int s = candidate.at(e);
            if (s == 0) continue;
            if (s < 0) candidate = candidate.negated();
            break;
        }
        normalized.insert(candidate);
    } while (next_subset(I, n));
    for (const SignVector& x : normalized) {
        out.cocircuits.push_back(x);
        out.cocircuits.push_back(x.negated());
    }
    std::sort(out.cocircuits.begin(), out.cocircuits.end());
    return out;
}

/// Outcome of checking the cocircuit axioms C0-C3 on a family of sign
/// vectors; on failure carries the first violated axiom and its witnesses
/// in input order.
struct AxiomCheck {
    bool ok = true;
    std::string axiom;
    std::vector<SignVector> witnesses;
    std::optional<int> element;
};

[[nodiscard]] inline AxiomCheck check_cocircuit_axioms(const std::vector<SignVector>& s) {
    AxiomCheck result;
    // C0: nonempty supports.
    for (const SignVector& x : s) {
        if (x.is_zero()) {
            result.ok = false;
            result.axiom = "C0";
            result.witnesses = {x};
            return result;
        }
    }
    // C1: closed under negation.
    for (const SignVector& x : s) {
        if (std::find(s.begin(), s.end(), x.negated()) == s.end()) {
            result.ok = false;
            result.axiom = "C1";
            result.witnesses = {x};
            return result;
        }
    }
    // C2: nested supports only between a vector and its negation.
    for (const SignVector& x : s) {
        for (const SignVector& y : s) {
            if (x == y || x == y.negated()) continue;
            const Subset sx = x.support();
            const Subset sy = y.support();
            if (std::includes(sy.begin(), sy.end(), sx.begin(), sx.end())) {
                result.ok = false;
                result.axiom = "C2";
                result.witnesses = {x, y};
                return result;
            }
        }
    }
    // C3: elimination. Witness order follows the input family.
    for (const SignVector& x : s) {
        for (const SignVector& y : s) {
            if (x == y.negated()) continue;
            for (int a = 1; a <= x.size(); ++a) {
                if (x.at(a) == 0 || x.at(a) != -y.at(a)) continue;
                bool found = false;
                for (const SignVector& z : s) {
                    if (z.at(a) != 0) continue;
                    bool matches = true;
                    for (int b = 1; b <= z.size(); ++b) {
                        if (z.at(b) == 0) continue;
                        if (z.at(b) != x.at(b) && z.at(b) != y.at(b)) { matches = false; break; }
                    }
                    if (matches) { found = true; break; }
                }
                if (!found) {
                    result.ok = false;
                    result.axiom = "C3";
                    result.witnesses = {x, y};
                    result.element = a;
                    return result;
                }
            }
        }
    }
    return result;
}

/// Closure of the cocircuits under composition, including the zero vector.
/// Worklist fixpoint; bounded by the 3^n possible sign vectors.
[[nodiscard]] inline std::set<SignVector> covectors_of(const CocircuitSet& cs) {
    std::set<SignVector> covectors;
    covectors.insert(SignVector::zero(cs.n));
    std::deque<SignVector> work(covectors.begin(), covectors.end());
    while (!work.empty()) {
        const SignVector x = work.front();
        work.pop_front();
        for (const SignVector& c : cs.cocircuits) {
            SignVector composed = compose(c, x);
            if (covectors.insert(composed).second) work.push_back(std::move(composed));
        }
    }
    return covectors;
}

}  // namespace omsv
