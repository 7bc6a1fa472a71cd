#pragma once

#include <utility>
#include <vector>

#include "omsv/matrix.hpp"
#include "omsv/rational.hpp"
#include "omsv/subsets.hpp"
#include "omsv/subspace.hpp"

namespace omsv {

/// Plucker coordinates of a subspace, computed from its RREF basis so the
/// stored values are unique per subspace (the abstract coordinates are only
/// defined up to one global scalar). Values are indexed by k-subsets of [n]
/// in lexicographic order. For k = 0 the map has the single value 1 at the
/// empty set.
class PluckerMap {
public:
    PluckerMap(int n, int k, std::vector<Rational> values)
        : n_(n), k_(k), values_(std::move(values)) {
        if (values_.size() != binomial(n_, k_)) throw std::invalid_argument("plucker: wrong value count");
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int k() const { return k_; }

    [[nodiscard]] const Rational& at(const Subset& I) const {
        if (static_cast<int>(I.size()) != k_) throw std::invalid_argument("plucker: subset has wrong size");
        return values_[subset_lex_rank(I, n_)];
    }

    /// All values, lexicographic by subset.
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

private:
    int n_;
    int k_;
    std::vector<Rational> values_;
};

/// All k x k minors of the RREF basis of v, in lexicographic subset order.
[[nodiscard]] inline PluckerMap maximal_minors(const Subspace& v) {
    const int n = v.ambient();
    const int k = v.dim();
    std::vector<Rational> values;
    values.reserve(binomial(n, k));
    Subset I = first_subset(k);
    do {
        values.push_back(determinant(v.basis().columns(I)));
    } while (next_subset(I, n));
    return PluckerMap(n, k, std::move(values));
}

}  // namespace omsv
