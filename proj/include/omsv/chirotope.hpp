#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "omsv/plucker.hpp"
#include "omsv/subsets.hpp"
#include "omsv/subspace.hpp"

namespace omsv {

/// Basis-orientation record of an oriented matroid of rank k on [n]:
/// a sign for every k-subset, stored in canonical global sign (the
/// lexicographically first nonzero subset carries +). Tuple evaluation
/// applies the permutation sign of sorting on demand.
class Chirotope {
public:
    Chirotope(int n, int k, std::vector<std::int8_t> orientation, bool normalize = true)
        : n_(n), k_(k), orientation_(std::move(orientation)) {
        if (k_ < 0 || k_ > n_) throw std::invalid_argument("chirotope: rank outside [0, n]");
        if (orientation_.size() != binomial(n_, k_)) throw std::invalid_argument("chirotope: wrong value count");
        for (std::int8_t s : orientation_)
            if (s < -1 || s > 1) throw std::invalid_argument("chirotope: value outside {-1,0,+1}");
        if (k_ >= 1 && std::all_of(orientation_.begin(), orientation_.end(), [](std::int8_t s) { return s == 0; }))
            throw std::invalid_argument("chirotope: identically zero");
        if (normalize) canonicalize();
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int k() const { return k_; }

    /// Value on a sorted k-subset.
    [[nodiscard]] int at(const Subset& I) const {
        if (static_cast<int>(I.size()) != k_) throw std::invalid_argument("chirotope: subset has wrong size");
        return orientation_[subset_lex_rank(I, n_)];
    }

    /// Alternating extension: value on an arbitrary tuple of ground elements;
    /// zero on tuples with repeats.
    [[nodiscard]] int eval(const std::vector<int>& tuple) const {
        if (static_cast<int>(tuple.size()) != k_) throw std::invalid_argument("chirotope: tuple has wrong size");
        std::vector<int> sorted = tuple;
        // Count inversions to get the sorting permutation's sign.
        int inversions = 0;
        for (std::size_t a = 0; a < sorted.size(); ++a)
            for (std::size_t b = a + 1; b < sorted.size(); ++b) {
                if (sorted[a] == sorted[b]) return 0;
                if (sorted[a] > sorted[b]) ++inversions;
            }
        std::sort(sorted.begin(), sorted.end());
        const int value = at(sorted);
        return (inversions % 2 == 0) ? value : -value;
    }

    [[nodiscard]] const std::vector<std::int8_t>& orientation() const { return orientation_; }

    /// Flips the global sign so the lexicographically first nonzero subset is +.
    void canonicalize() {
        for (std::int8_t s : orientation_) {
            if (s == 0) continue;
            if (s < 0)
                for (std::int8_t& t : orientation_) t = static_cast<std::int8_t>(-t);
            return;
        }
    }

    friend bool operator==(const Chirotope& a, const Chirotope& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.orientation_ == b.orientation_;
    }
    friend bool operator!=(const Chirotope& a, const Chirotope& b) { return !(a == b); }

private:
    int n_;
    int k_;
    std::vector<std::int8_t> orientation_;
};

[[nodiscard]] inline Chirotope chirotope_of(const PluckerMap& p) {
    std::vector<std::int8_t> orientation;
    orientation.reserve(p.values().size());
    for (const Rational& v : p.values()) orientation.push_back(static_cast<std::int8_t>(sign_of(v)));
    return Chirotope(p.n(), p.k(), std::move(orientation));
}

[[nodiscard]] inline Chirotope chirotope_of(const Subspace& v) { return chirotope_of(maximal_minors(v)); }

/// The k-subsets with nonzero orientation, lexicographically ordered.
[[nodiscard]] inline std::vector<Subset> bases(const Chirotope& c) {
    std::vector<Subset> out;
    Subset I = first_subset(c.k());
    std::size_t rank = 0;
    do {
        if (c.orientation()[rank] != 0) out.push_back(I);
        ++rank;
    } while (next_subset(I, c.n()));
    return out;
}

[[nodiscard]] inline bool is_uniform(const Chirotope& c) {
    return std::none_of(c.orientation().begin(), c.orientation().end(), [](std::int8_t s) { return s == 0; });
}

/// Element contained in every basis.
[[nodiscard]] inline bool is_coloop(const Chirotope& c, int e) {
    for (const Subset& b : bases(c))
        if (!subset_contains(b, e)) return false;
    return true;
}

/// Matroid rank of a ground subset: the largest overlap with a basis.
[[nodiscard]] inline int rank_of(const Chirotope& c, const Subset& s) {
    int best = 0;
    for (const Subset& b : bases(c)) {
        int overlap = 0;
        for (int e : b)
            if (subset_contains(s, e)) ++overlap;
        best = std::max(best, overlap);
    }
    return best;
}

/// Restriction to the ground subset f, re-indexed in increasing order.
/// Completing elements are chosen greedily in increasing order; the result
/// is independent of that choice up to global sign, which canonicalization
/// removes.
[[nodiscard]] inline Chirotope restrict(const Chirotope& c, const Subset& f) {
    const int k = c.k();
    const int l = rank_of(c, f);
    Subset completion;
    {
        Subset current = f;
        int current_rank = l;
        for (int e = 1; e <= c.n() && current_rank < k; ++e) {
            if (subset_contains(f, e) || subset_contains(completion, e)) continue;
            const Subset candidate = subset_with(current, e);
            if (rank_of(c, candidate) > current_rank) {
                completion = subset_with(completion, e);
                current = candidate;
                ++current_rank;
            }
        }
    }
    const int nf = static_cast<int>(f.size());
    std::vector<std::int8_t> orientation(binomial(nf, l));
    Subset J = first_subset(l);
    std::size_t rank = 0;
    do {
        std::vector<int> tuple;
        tuple.reserve(static_cast<std::size_t>(k));
        for (int pos : J) tuple.push_back(f[static_cast<std::size_t>(pos - 1)]);
        for (int e : completion) tuple.push_back(e);
        orientation[rank] = static_cast<std::int8_t>(c.eval(tuple));
        ++rank;
    } while (next_subset(J, nf));
    return Chirotope(nf, l, std::move(orientation));
}

/// Dual chirotope of rank n-k: chi*(J) = (-1)^(sum J) chi([n] \ J), canonicalized.
[[nodiscard]] inline Chirotope dual(const Chirotope& c) {
    const int n = c.n();
    const int dual_k = n - c.k();
    std::vector<std::int8_t> orientation(binomial(n, dual_k));
    Subset J = first_subset(dual_k);
    std::size_t rank = 0;
    do {
        int exponent = 0;
        for (int e : J) exponent += e;
        const int value = c.at(subset_complement(J, n));
        orientation[rank] = static_cast<std::int8_t>(exponent % 2 == 0 ? value : -value);
        ++rank;
    } while (next_subset(J, n));
    return Chirotope(n, dual_k, std::move(orientation));
}

/// Weak-map order for equal rank and ground set: a's orientation agrees with
/// +b or with -b wherever a is nonzero.
[[nodiscard]] inline bool weak_leq(const Chirotope& a, const Chirotope& b) {
    if (a.n() != b.n() || a.k() != b.k()) throw std::invalid_argument("weak_leq: rank or ground-set mismatch");
    for (int sign : {+1, -1}) {
        bool agrees = true;
        for (std::size_t t = 0; t < a.orientation().size(); ++t) {
            const int av = a.orientation()[t];
            if (av != 0 && av != sign * b.orientation()[t]) { agrees = false; break; }
        }
        if (agrees) return true;
    }
    return false;
}

}  // namespace omsv
