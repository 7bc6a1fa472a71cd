#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "omsv/subsets.hpp"

namespace omsv {

/// Element of {-,0,+}^n. Entries are int values in {-1,0,+1}; ground-set
/// positions are 1-based, matching subsets.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
        for (std::int8_t s : entries_)
            if (s < -1 || s > 1) throw std::invalid_argument("sign vector: entry outside {-1,0,+1}");
    }

    [[nodiscard]] static SignVector zero(int n) {
        return SignVector(std::vector<std::int8_t>(static_cast<std::size_t>(n), 0));
    }

    /// Parses "+-0-" style strings.
    [[nodiscard]] static SignVector parse(const std::string& text) {
        std::vector<std::int8_t> entries;
        entries.reserve(text.size());
        for (char c : text) {
            switch (c) {
                case '+': entries.push_back(1); break;
                case '-': entries.push_back(-1); break;
                case '0': entries.push_back(0); break;
                default: throw std::invalid_argument(std::string("sign vector: bad character '") + c + "'");
            }
        }
        return SignVector(std::move(entries));
    }

    [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }

    /// Entry at ground-set position e (1-based).
    [[nodiscard]] int at(int e) const { return entries_.at(static_cast<std::size_t>(e - 1)); }

    void set(int e, int value) {
        if (value < -1 || value > 1) throw std::invalid_argument("sign vector: entry outside {-1,0,+1}");
        entries_.at(static_cast<std::size_t>(e - 1)) = static_cast<std::int8_t>(value);
    }

    [[nodiscard]] const std::vector<std::int8_t>& entries() const { return entries_; }

    [[nodiscard]] Subset support() const {
        Subset out;
        for (int e = 1; e <= size(); ++e)
            if (at(e) != 0) out.push_back(e);
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](std::int8_t s) { return s == 0; });
    }

    [[nodiscard]] SignVector negated() const {
        std::vector<std::int8_t> out = entries_;
        for (std::int8_t& s : out) s = static_cast<std::int8_t>(-s);
        return SignVector(std::move(out));
    }

    /// Restriction to the sorted index set I, re-indexed by position.
    [[nodiscard]] SignVector restrict_to(const Subset& index_set) const {
        std::vector<std::int8_t> out;
        out.reserve(index_set.size());
        for (int e : index_set) out.push_back(static_cast<std::int8_t>(at(e)));
        return SignVector(std::move(out));
    }

    [[nodiscard]] std::string str() const {
        std::string out;
        out.reserve(entries_.size());
        for (std::int8_t s : entries_) out += (s > 0 ? '+' : (s < 0 ? '-' : '0'));
        return out;
    }

    friend bool operator==(const SignVector& a, const SignVector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const SignVector& a, const SignVector& b) { return !(a == b); }
    friend bool operator<(const SignVector& a, const SignVector& b) { return a.entries_ < b.entries_; }

private:
    std::vector<std::int8_t> entries_;
};

/// Number of sign changes of the zero-stripped sequence; -1 for the zero vector.
[[nodiscard]] inline int var(const SignVector& x) {
    int changes = 0;
    int last = 0;
    bool seen = false;
    for (std::int8_t s : x.entries()) {
        if (s == 0) continue;
        if (seen && s != last) ++changes;
        last = s;
        seen = true;
    }
    return seen ? changes : -1;
}

/// Maximum of var over all completions of the zero entries by +/-.
/// Linear DP: best achievable change count for prefixes ending in + or -.
[[nodiscard]] inline int varbar(const SignVector& x) {
    constexpr int kUnset = std::numeric_limits<int>::min();
    int best_plus = kUnset;
    int best_minus = kUnset;
    for (std::int8_t s : x.entries()) {
        const bool first = (best_plus == kUnset && best_minus == kUnset);
        int next_plus = kUnset;
        int next_minus = kUnset;
        if (s >= 0) {
            if (first) next_plus = 0;
            else next_plus = std::max(best_plus, best_minus == kUnset ? kUnset : best_minus + 1);
        }
        if (s <= 0) {
            if (first) next_minus = 0;
            else next_minus = std::max(best_minus, best_plus == kUnset ? kUnset : best_plus + 1);
        }
        best_plus = next_plus;
        best_minus = next_minus;
    }
    if (best_plus == kUnset && best_minus == kUnset) return -1;  // n = 0
    return std::max(best_plus, best_minus);
}

/// Entry e multiplied by (-1)^(e-1); an involution.
[[nodiscard]] inline SignVector alt(const SignVector& x) {
    std::vector<std::int8_t> out = x.entries();
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = static_cast<std::int8_t>(-out[i]);
    return SignVector(std::move(out));
}

/// X o Y: X with its zero slots filled from Y.
[[nodiscard]] inline SignVector compose(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("compose: length mismatch");
    std::vector<std::int8_t> out = x.entries();
    const auto& ye = y.entries();
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] == 0) out[i] = ye[i];
    return SignVector(std::move(out));
}

/// True iff x o y = y o x, i.e. no coordinate carries opposite signs.
[[nodiscard]] inline bool conformal(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("conformal: length mismatch");
    const auto& xe = x.entries();
    const auto& ye = y.entries();
    for (std::size_t i = 0; i < xe.size(); ++i)
        if (xe[i] != 0 && ye[i] != 0 && xe[i] != ye[i]) return false;
    return true;
}

/// X <= Y iff Y = X o Y (x agrees with y wherever x is nonzero).
[[nodiscard]] inline bool sv_leq(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("sv_leq: length mismatch");
    const auto& xe = x.entries();
    const auto& ye = y.entries();
    for (std::size_t i = 0; i < xe.size(); ++i)
        if (xe[i] != 0 && xe[i] != ye[i]) return false;
    return true;
}

/// The rotated total order j <_j j+1 <_j ... <_j j-1 on [n].
struct GaleOrder {
    int n = 0;
    int start = 1;

    GaleOrder(int n_, int start_) : n(n_), start(start_) {
        if (n < 0 || start < 1 || (n > 0 && start > n)) throw std::invalid_argument("gale order: start outside [n]");
    }

    /// Position of e in the rotated order, 0-based.
    [[nodiscard]] int position(int e) const { return (e - start + n) % n; }
};

/// Componentwise <= after sorting both sets by the rotated order.
[[nodiscard]] inline bool gale_leq(const Subset& i, const Subset& j, const GaleOrder& ord) {
    if (i.size() != j.size()) throw std::invalid_argument("gale_leq: size mismatch");
    std::vector<int> pi;
    std::vector<int> pj;
    pi.reserve(i.size());
    pj.reserve(j.size());
    for (int e : i) pi.push_back(ord.position(e));
    for (int e : j) pj.push_back(ord.position(e));
    std::sort(pi.begin(), pi.end());
    std::sort(pj.begin(), pj.end());
    for (std::size_t t = 0; t < pi.size(); ++t)
        if (pi[t] > pj[t]) return false;
    return true;
}

}  // namespace omsv
