#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace omsv {

/// Sorted subset of the ground set [n], 1-based.
using Subset = std::vector<int>;

[[nodiscard]] inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int t = 1; t <= k; ++t) result = result * static_cast<std::uint64_t>(n - k + t) / t;
    return result;
}

/// {1, ..., k}, the lexicographically first k-subset.
[[nodiscard]] inline Subset first_subset(int k) {
    Subset s(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) s[static_cast<std::size_t>(t)] = t + 1;
    return s;
}

/// Advances s to the next k-subset of [n] in lexicographic order;
/// returns false when s was the last one.
inline bool next_subset(Subset& s, int n) {
    const int k = static_cast<int>(s.size());
    int t = k - 1;
    while (t >= 0 && s[static_cast<std::size_t>(t)] == n - (k - 1 - t)) --t;
    if (t < 0) return false;
    ++s[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) s[static_cast<std::size_t>(u)] = s[static_cast<std::size_t>(u - 1)] + 1;
    return true;
}

/// Rank of a sorted k-subset among all k-subsets of [n] in lexicographic order.
[[nodiscard]] inline std::size_t subset_lex_rank(const Subset& s, int n) {
    const int k = static_cast<int>(s.size());
    std::uint64_t rank = 0;
    int prev = 0;
    for (int t = 0; t < k; ++t) {
        for (int v = prev + 1; v < s[static_cast<std::size_t>(t)]; ++v)
            rank += binomial(n - v, k - 1 - t);
        prev = s[static_cast<std::size_t>(t)];
    }
    return static_cast<std::size_t>(rank);
}

[[nodiscard]] inline std::vector<Subset> all_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset s = first_subset(k);
    do { out.push_back(s); } while (next_subset(s, n));
    return out;
}

[[nodiscard]] inline bool subset_contains(const Subset& s, int e) {
    return std::binary_search(s.begin(), s.end(), e);
}

/// s with element e inserted (e must not be present).
[[nodiscard]] inline Subset subset_with(const Subset& s, int e) {
    Subset out = s;
    out.insert(std::upper_bound(out.begin(), out.end(), e), e);
    return out;
}

/// s with element e removed (e must be present).
[[nodiscard]] inline Subset subset_without(const Subset& s, int e) {
    Subset out = s;
    out.erase(std::find(out.begin(), out.end(), e));
    return out;
}

[[nodiscard]] inline Subset subset_complement(const Subset& s, int n) {
    Subset out;
    out.reserve(static_cast<std::size_t>(n) - s.size());
    std::size_t t = 0;
    for (int e = 1; e <= n; ++e) {
        if (t < s.size() && s[t] == e) { ++t; continue; }
        out.push_back(e);
    }
    return out;
}

/// "1,3,4"; the empty subset prints as "".
[[nodiscard]] inline std::string subset_key(const Subset& s) {
    std::string out;
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (t > 0) out += ',';
        out += std::to_string(s[t]);
    }
    return out;
}

[[nodiscard]] inline Subset parse_subset(const std::string& text) {
    Subset out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string item = text.substr(pos, next - pos);
        if (!item.empty()) {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("subset: bad element '" + item + "'");
            out.push_back(value);
        }
        pos = next + 1;
    }
    if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("subset: elements must be strictly increasing");
    return out;
}

}  // namespace omsv
