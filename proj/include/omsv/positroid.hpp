#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "omsv/cocircuits.hpp"
#include "omsv/criteria.hpp"
#include "omsv/sign_vector.hpp"
#include "omsv/subsets.hpp"
#include "omsv/subspace.hpp"

namespace omsv {

/// The n-tuple (I_1, ..., I_n) of <=_j-lexicographic minima of the matroid.
struct GrassmannNecklace {
    int n = 0;
    int k = 0;
    std::vector<Subset> entries;
};

/// Basis family of a positroid (the matroid of a TNN subspace).
struct Positroid {
    int n = 0;
    int k = 0;
    std::vector<Subset> bases;
};

/// M(V): the k-subsets with nonzero Plucker coordinate.
[[nodiscard]] inline std::vector<Subset> matroid_of(const Subspace& v) {
    return bases(chirotope_of(v));
}

/// A(V): the k-subsets on which some vector of V alternates (no zeros,
/// consecutive components of opposite sign). Always contains M(V).
[[nodiscard]] inline std::vector<Subset> alternating_sets(const Subspace& v) {
    const int n = v.ambient();
    const int k = v.dim();
    const auto covectors = covectors_of(cocircuits_of(chirotope_of(v)));
    std::vector<Subset> out;
    Subset I = first_subset(k);
    do {
        for (const SignVector& x : covectors) {
            bool alternates = true;
            for (std::size_t t = 0; t < I.size() && alternates; ++t) {
                const int s = x.at(I[t]);
                if (s == 0 || (t > 0 && s == x.at(I[t - 1]))) alternates = false;
            }
            if (alternates) { out.push_back(I); break; }
        }
    } while (next_subset(I, n));
    return out;
}

/// The unique member Gale-below every other, if one exists.
[[nodiscard]] inline std::optional<Subset> gale_min_of(const std::vector<Subset>& sets, const GaleOrder& ord) {
    for (const Subset& candidate : sets) {
        bool minimal = true;
        for (const Subset& other : sets) {
            if (!gale_leq(candidate, other, ord)) { minimal = false; break; }
        }
        if (minimal) return candidate;
    }
    return std::nullopt;
}

/// Lexicographic minimum of a family with respect to the rotated order <=_j.
[[nodiscard]] inline Subset rotated_lex_min(const std::vector<Subset>& sets, const GaleOrder& ord) {
    if (sets.empty()) throw std::invalid_argument("rotated_lex_min: empty family");
    const Subset* best = nullptr;
    std::vector<int> best_key;
    for (const Subset& s : sets) {
        std::vector<int> key;
        key.reserve(s.size());
        for (int e : s) key.push_back(ord.position(e));
        std::sort(key.begin(), key.end());
        if (!best || key < best_key) {
            best = &s;
            best_key = std::move(key);
        }
    }
    return *best;
}

/// Schubert cell of a TNN subspace from sign data alone: the Gale minimum of
/// A(V), which equals the lexicographic minimum of M(V).
[[nodiscard]] inline Subset schubert_from_signs(const Subspace& v) {
    if (!is_tnn(v)) throw std::invalid_argument("schubert_from_signs: input is not totally nonnegative");
    const auto minimum = gale_min_of(alternating_sets(v), GaleOrder(v.ambient(), 1));
    if (!minimum) throw std::logic_error("schubert_from_signs: A(V) of a TNN subspace has a Gale minimum");
    return *minimum;
}

/// Grassmann necklace directly from the matroid.
[[nodiscard]] inline GrassmannNecklace necklace_of(const Subspace& v) {
    if (v.dim() < 1) throw std::invalid_argument("necklace_of: k must be at least 1");
    GrassmannNecklace neck;
    neck.n = v.ambient();
    neck.k = v.dim();
    const auto matroid = matroid_of(v);
    for (int j = 1; j <= neck.n; ++j)
        neck.entries.push_back(rotated_lex_min(matroid, GaleOrder(neck.n, j)));
    return neck;
}

/// Grassmann necklace from sign data: entry j is the Schubert cell of the
/// j-th cyclic shift of V, with indices shifted back.
[[nodiscard]] inline GrassmannNecklace necklace_from_signs(const Subspace& v) {
    if (!is_tnn(v)) throw std::invalid_argument("necklace_from_signs: input is not totally nonnegative");
    if (v.dim() < 1) throw std::invalid_argument("necklace_from_signs: k must be at least 1");
    GrassmannNecklace neck;
    neck.n = v.ambient();
    neck.k = v.dim();
    for (int j = 1; j <= neck.n; ++j) {
        const Subset shifted = schubert_from_signs(cyclic_shift(v, j));
        Subset entry;
        for (int s : shifted) entry.push_back((s + j - 2) % neck.n + 1);
        std::sort(entry.begin(), entry.end());
        neck.entries.push_back(entry);
    }
    return neck;
}

/// Oh's reconstruction: the positroid is the intersection of the j-Gale
/// up-sets of the necklace entries.
[[nodiscard]] inline Positroid positroid_from_necklace(const GrassmannNecklace& neck) {
    Positroid out;
    out.n = neck.n;
    out.k = neck.k;
    if (static_cast<int>(neck.entries.size()) != neck.n)
        throw std::invalid_argument("positroid_from_necklace: necklace must have n entries");
    Subset J = first_subset(neck.k);
    do {
        bool in = true;
        for (int j = 1; j <= neck.n && in; ++j)
            in = gale_leq(neck.entries[static_cast<std::size_t>(j - 1)], J, GaleOrder(neck.n, j));
        if (in) out.bases.push_back(J);
    } while (next_subset(J, neck.n));
    return out;
}

/// True iff some vector of V has sign pattern w on the index set I
/// (equivalently, w is a covector of the restriction M(V)|_I).
[[nodiscard]] inline bool realizes(const Subspace& v, const Subset& I, const SignVector& w) {
    if (static_cast<int>(I.size()) != w.size()) throw std::invalid_argument("realizes: pattern length mismatch");
    const Chirotope restricted = restrict(chirotope_of(v), I);
    const auto covectors = covectors_of(cocircuits_of(restricted));
    return covectors.count(w) > 0;
}

/// The k sign patterns (up to negation) that alternate between consecutive
/// components with at most one exceptional pair: first the strictly
/// alternating pattern, then one pattern per exceptional pair (p, p+1).
[[nodiscard]] inline std::vector<SignVector> basis_test_patterns(int k) {
    std::vector<SignVector> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) {
        std::vector<std::int8_t> entries(static_cast<std::size_t>(k));
        for (int a = 1; a <= k; ++a) {
            const int parity = (p == 0 || a <= p) ? (a - 1) : a;
            entries[static_cast<std::size_t>(a - 1)] = static_cast<std::int8_t>(parity % 2 == 0 ? 1 : -1);
        }
        out.emplace_back(std::move(entries));
    }
    return out;
}

/// Basis membership test for TNN subspaces via the 2k-pattern criterion:
/// J is a basis iff V realizes every pattern from basis_test_patterns on J.
[[nodiscard]] inline bool basis_test_signs(const Subspace& v, const Subset& j) {
    if (!is_tnn(v)) throw std::invalid_argument("basis_test_signs: input is not totally nonnegative");
    if (static_cast<int>(j.size()) != v.dim()) throw std::invalid_argument("basis_test_signs: |J| must equal k");
    for (const SignVector& pattern : basis_test_patterns(v.dim()))
        if (!realizes(v, j, pattern)) return false;
    return true;
}

/// V in Gr_{k,n} with V|_J = {v}^perp: realizes every sign pattern in
/// {+,-}^J except exactly +/- sign(v), and J is not a basis of M(V).
[[nodiscard]] inline Subspace all_but_one_construction(int n, const Subset& j, const std::vector<Rational>& v) {
    const int k = static_cast<int>(j.size());
    if (n <= k) throw std::invalid_argument("all_but_one_construction: need n > k");
    if (static_cast<int>(v.size()) != k) throw std::invalid_argument("all_but_one_construction: |v| must equal |J|");
    for (const Rational& x : v)
        if (x == 0) throw std::invalid_argument("all_but_one_construction: v must be nowhere zero");
    // k-1 adjacent-pair kernel rows span {v}^perp inside R^J; one extra row
    // outside J restores dimension k.
    ExactMatrix m(k, n);
    for (int t = 0; t + 1 < k; ++t) {
        m(t, j[static_cast<std::size_t>(t)] - 1) = v[static_cast<std::size_t>(t + 1)];
        m(t, j[static_cast<std::size_t>(t + 1)] - 1) = -v[static_cast<std::size_t>(t)];
    }
    const Subset outside = subset_complement(j, n);
    m(k - 1, outside.front() - 1) = 1;
    const Subspace out = row_reduce(m);
    if (out.dim() != k) throw std::logic_error("all_but_one_construction: construction lost rank");
    return out;
}

}  // namespace omsv
