#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omsv/chirotope.hpp"
#include "omsv/criteria.hpp"
#include "omsv/plucker.hpp"
#include "omsv/subsets.hpp"
#include "omsv/subspace.hpp"

namespace omsv {

/// One i ->eps j perturbation: add a tiny eps-signed multiple of column i to
/// column j.
struct PerturbationStep {
    int i = 0;
    int j = 0;
    int epsilon = +1;

    friend bool operator==(const PerturbationStep& a, const PerturbationStep& b) {
        return a.i == b.i && a.j == b.j && a.epsilon == b.epsilon;
    }
};

/// "i->+j" / "i->-j".
[[nodiscard]] inline std::string step_str(const PerturbationStep& s) {
    return std::to_string(s.i) + "->" + (s.epsilon > 0 ? "+" : "-") + std::to_string(s.j);
}

[[nodiscard]] inline PerturbationStep parse_step(const std::string& text) {
    const std::size_t arrow = text.find("->");
    if (arrow == std::string::npos || arrow + 2 >= text.size())
        throw std::invalid_argument("step: expected \"i->+j\" or \"i->-j\"");
    PerturbationStep s;
    std::size_t used = 0;
    s.i = std::stoi(text.substr(0, arrow), &used);
    if (used != arrow) throw std::invalid_argument("step: bad source index");
    const char sign = text[arrow + 2];
    if (sign != '+' && sign != '-') throw std::invalid_argument("step: missing sign");
    s.epsilon = (sign == '+') ? +1 : -1;
    const std::string rest = text.substr(arrow + 3);
    s.j = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("step: bad target index");
    return s;
}

[[nodiscard]] inline std::vector<PerturbationStep> parse_steps(const std::string& text) {
    std::vector<PerturbationStep> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(parse_step(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

enum class ScheduleKind { CyclicForward, CyclicBackward, SweepRank, SweepCorank };

[[nodiscard]] inline std::string schedule_kind_str(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::CyclicForward: return "cyclic-forward";
        case ScheduleKind::CyclicBackward: return "cyclic-backward";
        case ScheduleKind::SweepRank: return "sweep-k";
        case ScheduleKind::SweepCorank: return "sweep-nk";
    }
    throw std::logic_error("unreachable");
}

[[nodiscard]] inline ScheduleKind parse_schedule_kind(const std::string& text) {
    if (text == "cyclic-forward") return ScheduleKind::CyclicForward;
    if (text == "cyclic-backward") return ScheduleKind::CyclicBackward;
    if (text == "sweep-k") return ScheduleKind::SweepRank;
    if (text == "sweep-nk") return ScheduleKind::SweepCorank;
    throw std::invalid_argument("schedule: unknown kind '" + text + "'");
}

/// A uniformizing perturbation sequence. The two cyclic kinds need the
/// parity of the variation bound m for their wrap-around step; the two sweep
/// kinds use + signs throughout.
struct Schedule {
    ScheduleKind kind = ScheduleKind::SweepRank;
    int n = 0;
    int k = 0;
    std::optional<int> m_parity;
    std::vector<PerturbationStep> steps;
};

/// Step lists of the uniformization theorem, verbatim:
///   cyclic-forward : k(2n-k-1) consecutive steps of
///                    1->+2, ..., (n-1)->+n, n->((-1)^m)1, 1->+2, ...
///   cyclic-backward: (n-k)(n+k-1) consecutive steps of
///                    2->+1, ..., n->+(n-1), 1->((-1)^m)n, 2->+1, ...
///   sweep-k        : [1->+2, ..., (n-1)->+n, n->+(n-1), ..., 2->+1] k times
///   sweep-nk       : [2->+1, ..., n->+(n-1), (n-1)->+n, ..., 1->+2] n-k times
/// `start_offset` rotates the starting point of the two cyclic kinds ("any
/// consecutive" steps uniformize).
[[nodiscard]] inline Schedule make_schedule(ScheduleKind kind, int n, int k,
                                            std::optional<int> m_parity = std::nullopt,
                                            int start_offset = 0) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("schedule: need 1 <= n and 0 <= k <= n");
    Schedule sched;
    sched.kind = kind;
    sched.n = n;
    sched.k = k;
    sched.m_parity = m_parity;
    const auto cyclic_sign = [&]() -> int {
        if (!m_parity.has_value()) throw std::invalid_argument("schedule: cyclic kinds require the parity of m");
        return (*m_parity % 2 == 0) ? +1 : -1;
    };
    switch (kind) {
        case ScheduleKind::CyclicForward: {
            const int wrap_sign = cyclic_sign();
            const long count = static_cast<long>(k) * (2L * n - k - 1);
            for (long t = 0; t < count; ++t) {
                const int p = static_cast<int>((start_offset + t) % n);
                if (p < n - 1) sched.steps.push_back({p + 1, p + 2, +1});
                else sched.steps.push_back({n, 1, wrap_sign});
            }
            break;
        }
        case ScheduleKind::CyclicBackward: {
            const int wrap_sign = cyclic_sign();
            const long count = static_cast<long>(n - k) * (n + k - 1);
            for (long t = 0; t < count; ++t) {
                const int p = static_cast<int>((start_offset + t) % n);
                if (p < n - 1) sched.steps.push_back({p + 2, p + 1, +1});
                else sched.steps.push_back({1, n, wrap_sign});
            }
            break;
        }
        case ScheduleKind::SweepRank: {
            for (int rep = 0; rep < k; ++rep) {
                for (int i = 1; i < n; ++i) sched.steps.push_back({i, i + 1, +1});
                for (int i = n; i > 1; --i) sched.steps.push_back({i, i - 1, +1});
            }
            break;
        }
        case ScheduleKind::SweepCorank: {
            for (int rep = 0; rep < n - k; ++rep) {
                for (int i = 2; i <= n; ++i) sched.steps.push_back({i, i - 1, +1});
                for (int i = n - 1; i >= 1; --i) sched.steps.push_back({i, i + 1, +1});
            }
            break;
        }
    }
    return sched;
}

/// Chirotope of the i ->eps j perturbation: fills chi(I) = 0 slots with
/// (-1)^|I cap (i,j)| * eps * chi((I \ {j}) u {i}) when i is outside I and
/// j inside; identity when i = j or j is a coloop.
[[nodiscard]] inline Chirotope perturb(const Chirotope& c, const PerturbationStep& s) {
    const int n = c.n();
    const int k = c.k();
    if (s.i < 1 || s.i > n || s.j < 1 || s.j > n) throw std::invalid_argument("perturb: index outside [n]");
    if (s.epsilon != 1 && s.epsilon != -1) throw std::invalid_argument("perturb: epsilon must be +1 or -1");
    if (s.i == s.j || is_coloop(c, s.j)) return c;
    const int lo = std::min(s.i, s.j);
    const int hi = std::max(s.i, s.j);
    std::vector<std::int8_t> orientation = c.orientation();
    Subset I = first_subset(k);
    std::size_t rank = 0;
    do {
        if (orientation[rank] == 0 && subset_contains(I, s.j) && !subset_contains(I, s.i)) {
            int between = 0;
            for (int e : I)
                if (lo < e && e < hi) ++between;
            const int source = c.at(subset_with(subset_without(I, s.j), s.i));
            const int value = s.epsilon * source;
            orientation[rank] = static_cast<std::int8_t>(between % 2 == 0 ? value : -value);
        }
        ++rank;
    } while (next_subset(I, n));
    return Chirotope(n, k, std::move(orientation));
}

/// Folds perturb over the schedule; the result is uniform.
[[nodiscard]] inline Chirotope uniformize(const Chirotope& c, const Schedule& sched) {
    if (sched.n != c.n() || sched.k != c.k())
        throw std::invalid_argument("uniformize: schedule was generated for different n, k");
    Chirotope out = c;
    for (const PerturbationStep& s : sched.steps) out = perturb(out, s);
    return out;
}

/// Exact maximum of var over the covectors: uniformize with the sweep-k
/// schedule (sign-free), then read k-1 + max var of the chirotope sequences.
[[nodiscard]] inline int max_var(const Chirotope& c) {
    const int k = c.k();
    if (k == 0) return -1;  // only the zero covector
    const Chirotope uniform = uniformize(c, make_schedule(ScheduleKind::SweepRank, c.n(), k));
    int best = -1;
    Subset I = first_subset(k - 1);
    do {
        best = std::max(best, var(chirotope_sequence(uniform, I)));
    } while (next_subset(I, c.n()));
    return k - 1 + best;
}

[[nodiscard]] inline int max_var(const Subspace& v) { return max_var(chirotope_of(v)); }

/// Realizes one perturbation step on a subspace: replaces column j of the
/// RREF basis by col_j + alpha * col_i with alpha = eps * r/2, where r is the
/// smallest |Delta_I| / |Delta_(I\j u i)| over index pairs with both minors
/// nonzero (alpha = eps when no pair constrains). Any |alpha| < r keeps every
/// nonzero Plucker sign, so the chirotope of the result is exactly the
/// perturbed chirotope.
[[nodiscard]] inline std::pair<Subspace, Rational> realize_step(const Subspace& v, const PerturbationStep& s) {
    const int n = v.ambient();
    const int k = v.dim();
    if (s.i < 1 || s.i > n || s.j < 1 || s.j > n) throw std::invalid_argument("realize_step: index outside [n]");
    if (s.i == s.j) return {v, Rational(0)};
    const PluckerMap deltas = maximal_minors(v);
    std::optional<Rational> min_ratio;
    Subset I = first_subset(k);
    do {
        if (!subset_contains(I, s.j) || subset_contains(I, s.i)) continue;
        const Rational& target = deltas.at(I);
        if (target == 0) continue;
        const Rational& source = deltas.at(subset_with(subset_without(I, s.j), s.i));
        if (source == 0) continue;
        Rational ratio = abs(target) / abs(source);
        if (!min_ratio || ratio < *min_ratio) min_ratio = std::move(ratio);
    } while (next_subset(I, n));
    const Rational alpha = min_ratio ? Rational(s.epsilon) * (*min_ratio) / 2 : Rational(s.epsilon);
    ExactMatrix m = v.basis();
    for (int row = 0; row < k; ++row) m(row, s.j - 1) += alpha * m(row, s.i - 1);
    return {row_reduce(m), alpha};
}

/// Perturbs v into a generic subspace (all Plucker coordinates nonzero) with
/// the same maximum sign variation, by realizing the sweep-k schedule.
[[nodiscard]] inline Subspace densify(const Subspace& v) {
    if (v.dim() == 0) throw std::invalid_argument("densify: k must be at least 1");
    Subspace out = v;
    const Schedule sched = make_schedule(ScheduleKind::SweepRank, v.ambient(), v.dim());
    for (const PerturbationStep& s : sched.steps) out = realize_step(out, s).first;
    return out;
}

}  // namespace omsv
