#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "omsv/cocircuits.hpp"
#include "omsv/criteria.hpp"
#include "omsv/feasibility.hpp"
#include "omsv/perturbation.hpp"
#include "omsv/plucker.hpp"
#include "omsv/sign_vector.hpp"
#include "omsv/subsets.hpp"
#include "omsv/subspace.hpp"

namespace omsv {

/// Verdict on well-definedness of the map Gr_{k,n} -> Gr_{k,r} induced by Z
/// on the totally nonnegative (or totally positive) part. The trace records
/// one entry per (d+1)-subset checked by the minor criterion; on failure a
/// witness vector in ker Z plus its extension subspace is attached.
struct AmplituhedronVerdict {
    struct TraceEntry {
        Subset subset;
        std::vector<Rational> sequence;  // rational deletion sequence (TNN mode)
        SignVector signs;
        int value = 0;  // varbar of the sequence (TNN) / var after perturbation (TP)
    };

    bool well_defined = true;
    int k = 0;
    int n = 0;
    int r = 0;
    int d = 0;
    std::vector<TraceEntry> criterion_trace;
    std::optional<std::vector<Rational>> witness_vector;
    std::optional<Subspace> witness_subspace;
};

namespace detail {

inline void validate_amplituhedron_input(const ExactMatrix& z, int k) {
    if (k < 0 || k > z.cols()) throw std::invalid_argument("amplituhedron: need 0 <= k <= n");
    if (z.rows() > z.cols()) throw std::invalid_argument("amplituhedron: need r <= n");
}

/// Rational vector in V with the prescribed sign pattern, via exact
/// feasibility on the coefficient space of the RREF basis.
[[nodiscard]] inline std::optional<std::vector<Rational>> vector_with_signs(const Subspace& v,
                                                                            const SignVector& pattern) {
    const int n = v.ambient();
    const int k = v.dim();
    if (pattern.size() != n) throw std::invalid_argument("vector_with_signs: length mismatch");
    std::vector<LinearConstraint> constraints;
    for (int i = 1; i <= n; ++i) {
        LinearConstraint con;
        con.coeffs.resize(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) con.coeffs[static_cast<std::size_t>(t)] = v.basis()(t, i - 1);
        const int s = pattern.at(i);
        con.rel = (s == 0) ? LinearConstraint::Rel::Eq : LinearConstraint::Rel::Gt;
        if (s < 0)
            for (Rational& x : con.coeffs) x = -x;
        constraints.push_back(std::move(con));
    }
    const auto coeffs = feasible_point(constraints, static_cast<std::size_t>(k));
    if (!coeffs) return std::nullopt;
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) out[static_cast<std::size_t>(i)] += (*coeffs)[static_cast<std::size_t>(t)] * v.basis()(t, i);
    return out;
}

/// The covector of the kernel oriented matroid minimizing
/// (var, support, canonical signs); used as the bad vector when the TNN map
/// collapses. Minimum var over nonzero covectors is attained at cocircuits,
/// but scanning all covectors keeps the statement direct.
[[nodiscard]] inline SignVector min_var_kernel_covector(const Subspace& kernel_space) {
    const auto covectors = covectors_of(cocircuits_of(chirotope_of(kernel_space)));
    std::optional<SignVector> best;
    int best_var = 0;
    Subset best_support;
    for (const SignVector& raw : covectors) {
        if (raw.is_zero()) continue;
        SignVector x = raw;
        for (int e = 1; e <= x.size(); ++e) {
            const int s = x.at(e);
            if (s == 0) continue;
            if (s < 0) x = x.negated();
            break;
        }
        const int vx = var(x);
        const Subset sx = x.support();
        if (!best || vx < best_var || (vx == best_var && (sx < best_support || (sx == best_support && x < *best)))) {
            best = x;
            best_var = vx;
            best_support = sx;
        }
    }
    if (!best) throw std::logic_error("min_var_kernel_covector: kernel has no nonzero covector");
    return *best;
}

}  // namespace detail

/// A totally nonnegative k-dimensional subspace containing v, built from
/// interval-supported rows: partition [n] into k intervals on which v does
/// not change sign; row j is v on I_j when nonzero there, the indicator of
/// I_j otherwise. Exists iff var(v) <= k-1 (the Gantmakher-Krein bound).
[[nodiscard]] inline Subspace extend_nonneg(const std::vector<Rational>& v, int k) {
    const int n = static_cast<int>(v.size());
    const SignVector signs = sign_vector_of(v);
    if (signs.is_zero()) throw std::invalid_argument("extend_nonneg: v must be nonzero");
    if (k < 1 || k > n) throw std::invalid_argument("extend_nonneg: need 1 <= k <= n");
    if (var(signs) > k - 1)
        throw std::invalid_argument("extend_nonneg: var(v) = " + std::to_string(var(signs)) +
                                    " exceeds k-1 = " + std::to_string(k - 1) +
                                    "; no totally nonnegative extension exists");

    // Maximal constant-sign and zero segments, as (first, last, sign).
    struct Segment { int first; int last; int sign; };
    std::vector<Segment> segments;
    for (int e = 1; e <= n; ++e) {
        const int s = signs.at(e);
        if (!segments.empty() && segments.back().sign == s) segments.back().last = e;
        else segments.push_back({e, e, s});
    }
    // Merge down to k intervals: leftmost zero segment joins its left
    // neighbor (right if leading), then leftmost same-sign adjacent pair.
    while (static_cast<int>(segments.size()) > k) {
        std::size_t zero_at = segments.size();
        for (std::size_t t = 0; t < segments.size(); ++t)
            if (segments[t].sign == 0) { zero_at = t; break; }
        std::size_t into;
        std::size_t from;
        if (zero_at < segments.size()) {
            from = zero_at;
            into = (zero_at > 0) ? zero_at - 1 : zero_at + 1;
        } else {
            into = segments.size();
            for (std::size_t t = 0; t + 1 < segments.size(); ++t)
                if (segments[t].sign == segments[t + 1].sign) { into = t; break; }
            if (into == segments.size()) throw std::logic_error("extend_nonneg: cannot merge below var(v)+1 intervals");
            from = into + 1;
        }
        const std::size_t lo = std::min(into, from);
        segments[lo].last = segments[std::max(into, from)].last;
        if (segments[lo].sign == 0) segments[lo].sign = segments[std::max(into, from)].sign;
        segments.erase(segments.begin() + static_cast<std::ptrdiff_t>(std::max(into, from)));
    }
    // Split up to k intervals: peel the first element off the leftmost
    // interval with at least two.
    while (static_cast<int>(segments.size()) < k) {
        bool split = false;
        for (std::size_t t = 0; t < segments.size(); ++t) {
            if (segments[t].first == segments[t].last) continue;
            Segment head{segments[t].first, segments[t].first, segments[t].sign};
            segments[t].first += 1;
            segments.insert(segments.begin() + static_cast<std::ptrdiff_t>(t), head);
            split = true;
            break;
        }
        if (!split) throw std::logic_error("extend_nonneg: cannot split into k nonempty intervals");
    }

    ExactMatrix m(k, n);
    for (int row = 0; row < k; ++row) {
        const Segment& seg = segments[static_cast<std::size_t>(row)];
        bool all_zero = true;
        for (int e = seg.first; e <= seg.last; ++e)
            if (signs.at(e) != 0) { all_zero = false; break; }
        for (int e = seg.first; e <= seg.last; ++e)
            m(row, e - 1) = all_zero ? Rational(1) : v[static_cast<std::size_t>(e - 1)];
    }
    return row_reduce(m);
}

/// A totally positive k-dimensional subspace containing v. Takes the
/// Vandermonde subspace with nodes 1..n, finds w in it with sign(w) =
/// sign(v) by exact strict feasibility, and rescales coordinates by the
/// positive factors v_i / w_i. Exists iff varbar(v) <= k-1.
[[nodiscard]] inline Subspace extend_pos(const std::vector<Rational>& v, int k) {
    const int n = static_cast<int>(v.size());
    const SignVector signs = sign_vector_of(v);
    if (signs.is_zero()) throw std::invalid_argument("extend_pos: v must be nonzero");
    if (k < 1 || k > n) throw std::invalid_argument("extend_pos: need 1 <= k <= n");
    if (varbar(signs) > k - 1)
        throw std::invalid_argument("extend_pos: varbar(v) = " + std::to_string(varbar(signs)) +
                                    " exceeds k-1 = " + std::to_string(k - 1) +
                                    "; no totally positive extension exists");
    ExactMatrix vandermonde(k, n);
    for (int i = 1; i <= n; ++i) {
        Rational power(1);
        for (int row = 0; row < k; ++row) {
            vandermonde(row, i - 1) = power;
            power *= i;
        }
    }
    const Subspace base = row_reduce(vandermonde);
    const auto w = detail::vector_with_signs(base, signs);
    if (!w) throw std::logic_error("extend_pos: sign pattern not realizable in the Vandermonde subspace");
    ExactMatrix scaled = base.basis();
    for (int i = 1; i <= n; ++i) {
        // Positive column scale v_i / w_i; 1 where both vanish.
        const Rational factor = (signs.at(i) == 0)
                                    ? Rational(1)
                                    : v[static_cast<std::size_t>(i - 1)] / (*w)[static_cast<std::size_t>(i - 1)];
        for (int row = 0; row < k; ++row) scaled(row, i - 1) *= factor;
    }
    return row_reduce(scaled);
}

/// Minor criterion for the map induced by Z on the TNN Grassmannian
/// (varbar of every qualifying deletion sequence at most d-k). On failure
/// constructs the witness: a nonzero kernel vector with var <= k-1 and its
/// TNN extension, which Z collapses below dimension k.
[[nodiscard]] inline AmplituhedronVerdict well_defined_tnn(const ExactMatrix& z, int k) {
    detail::validate_amplituhedron_input(z, k);
    AmplituhedronVerdict verdict;
    verdict.k = k;
    verdict.n = z.cols();
    verdict.r = z.rows();
    const Subspace w = row_reduce(z);
    const int d = w.dim();
    verdict.d = d;
    const int n = z.cols();
    if (d + 1 <= n && k >= 1) {
        const PluckerMap deltas = maximal_minors(w);
        Subset I = first_subset(d + 1);
        do {
            if (row_reduce(w.basis().columns(I)).dim() != d) continue;
            AmplituhedronVerdict::TraceEntry entry;
            entry.subset = I;
            for (int i : I) entry.sequence.push_back(deltas.at(subset_without(I, i)));
            entry.signs = sign_vector_of(entry.sequence);
            entry.value = varbar(entry.signs);
            if (entry.value > d - k) verdict.well_defined = false;
            verdict.criterion_trace.push_back(std::move(entry));
        } while (next_subset(I, n));
    }
    if (!verdict.well_defined) {
        const Subspace ker = kernel(z);
        const SignVector pattern = detail::min_var_kernel_covector(ker);
        const auto vec = detail::vector_with_signs(ker, pattern);
        if (!vec) throw std::logic_error("well_defined_tnn: covector lift infeasible");
        verdict.witness_vector = *vec;
        verdict.witness_subspace = extend_nonneg(*vec, k);
    }
    return verdict;
}

/// Criterion for the map induced by Z on the totally positive Grassmannian:
/// varbar(v) >= k for all nonzero v in ker Z. Implemented through the
/// duality rewrite max_var(alt(ker Z)) <= n-k-1, whose sweep-k
/// uniformization is the generic perturbation the minor criterion asks for;
/// the trace reports var of the perturbed deletion sequences.
[[nodiscard]] inline AmplituhedronVerdict well_defined_tp(const ExactMatrix& z, int k) {
    detail::validate_amplituhedron_input(z, k);
    AmplituhedronVerdict verdict;
    verdict.k = k;
    verdict.n = z.cols();
    verdict.r = z.rows();
    const int n = z.cols();
    const Subspace ker = kernel(z);
    verdict.d = n - ker.dim();
    const int ku = ker.dim();
    if (ku > 0 && k >= 1) {
        const Subspace twisted = alt_twist(ker);
        const Chirotope uniform =
            uniformize(chirotope_of(twisted), make_schedule(ScheduleKind::SweepRank, n, ku));
        Subset J = first_subset(ku - 1);
        do {
            AmplituhedronVerdict::TraceEntry entry;
            entry.subset = subset_complement(J, n);
            entry.signs = chirotope_sequence(uniform, J);
            entry.value = var(entry.signs);
            if (entry.value > verdict.d - k) verdict.well_defined = false;
            verdict.criterion_trace.push_back(std::move(entry));
        } while (next_subset(J, n));
        std::sort(verdict.criterion_trace.begin(), verdict.criterion_trace.end(),
                  [](const auto& a, const auto& b) { return a.subset < b.subset; });
    }
    if (!verdict.well_defined) {
        // Bad vector: nonzero kernel covector minimizing (varbar, support, signs).
        const auto covectors = covectors_of(cocircuits_of(chirotope_of(ker)));
        std::optional<SignVector> best;
        int best_stat = 0;
        Subset best_support;
        for (const SignVector& raw : covectors) {
            if (raw.is_zero()) continue;
            SignVector x = raw;
            for (int e = 1; e <= x.size(); ++e) {
                const int s = x.at(e);
                if (s == 0) continue;
                if (s < 0) x = x.negated();
                break;
            }
            const int stat = varbar(x);
            const Subset sx = x.support();
            if (!best || stat < best_stat ||
                (stat == best_stat && (sx < best_support || (sx == best_support && x < *best)))) {
                best = x;
                best_stat = stat;
                best_support = sx;
            }
        }
        if (!best || best_stat > k - 1) throw std::logic_error("well_defined_tp: verdict false without witness");
        const auto vec = detail::vector_with_signs(ker, *best);
        if (!vec) throw std::logic_error("well_defined_tp: covector lift infeasible");
        verdict.witness_vector = *vec;
        verdict.witness_subspace = extend_pos(*vec, k);
    }
    return verdict;
}

/// Explicit totally nonnegative V with dim(Z(V)) < k; defined exactly when
/// the TNN map is not well-defined.
[[nodiscard]] inline Subspace counterexample_subspace(const ExactMatrix& z, int k) {
    AmplituhedronVerdict verdict = well_defined_tnn(z, k);
    if (verdict.well_defined)
        throw std::invalid_argument("counterexample_subspace: the amplituhedron map is well-defined");
    return *verdict.witness_subspace;
}

}  // namespace omsv
