#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "omsv/amplituhedron.hpp"
#include "omsv/oracle.hpp"

using namespace omsv;

namespace {

ExactMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> converted;
    for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
    return ExactMatrix::from_rows(converted);
}

std::vector<Rational> vec(const std::vector<long>& entries) {
    return std::vector<Rational>(entries.begin(), entries.end());
}

int rank_of_image(const ExactMatrix& z, const Subspace& v) {
    // dim Z(V): rank of B Z^T where B spans V.
    ExactMatrix product(v.dim(), z.rows());
    for (int i = 0; i < v.dim(); ++i)
        for (int r = 0; r < z.rows(); ++r) product(i, r) = row_dot(v.basis(), i, z, r);
    return row_reduce(product).dim();
}

}  // namespace

TEST_CASE("well_defined_tnn on the paper's 2x4 example") {
    const ExactMatrix z = mat({{2, -1, 1, 1}, {1, 2, -1, 3}});
    SECTION("well-defined iff k <= 1") {
        CHECK(well_defined_tnn(z, 0).well_defined);
        CHECK(well_defined_tnn(z, 1).well_defined);
        CHECK_FALSE(well_defined_tnn(z, 2).well_defined);
        CHECK_FALSE(well_defined_tnn(z, 3).well_defined);
        CHECK_FALSE(well_defined_tnn(z, 4).well_defined);
    }
    SECTION("trace carries the four deletion sequences, each with one sign change") {
        const AmplituhedronVerdict verdict = well_defined_tnn(z, 1);
        REQUIRE(verdict.criterion_trace.size() == 4);
        CHECK(verdict.d == 2);
        for (const auto& entry : verdict.criterion_trace) {
            CHECK(entry.sequence.size() == 3);
            CHECK(var(entry.signs) == 1);
            CHECK(entry.value == 1);
        }
        // The paper's sequences, up to the single global Plucker scalar.
        const std::vector<std::vector<Rational>> expected{
            vec({-1, -3, 5}), vec({-5, 5, 5}), vec({4, 5, -3}), vec({4, -5, -1})};
        for (std::size_t t = 0; t < 4; ++t)
            CHECK(testing::proportional(expected[t], verdict.criterion_trace[t].sequence));
    }
    SECTION("witness for k = 2 is the paper's construction") {
        const AmplituhedronVerdict verdict = well_defined_tnn(z, 2);
        REQUIRE(verdict.witness_vector.has_value());
        const Subspace expected = row_reduce(mat({{1, 0, 0, 0}, {0, -3, -5, 0}}));
        CHECK(*verdict.witness_subspace == expected);
        CHECK(kernel(z).contains(*verdict.witness_vector));
        CHECK(var(sign_vector_of(*verdict.witness_vector)) <= 1);
        CHECK(rank_of_image(z, *verdict.witness_subspace) == 1);
    }
}

TEST_CASE("well_defined_tnn edge cases") {
    SECTION("positive maximal minors imply well-defined for every k <= r") {
        ExactMatrix vdm(2, 5);
        for (int i = 1; i <= 5; ++i) {
            vdm(0, i - 1) = 1;
            vdm(1, i - 1) = i;
        }
        for (int k = 0; k <= 2; ++k) CHECK(well_defined_tnn(vdm, k).well_defined);
        CHECK_FALSE(well_defined_tnn(vdm, 3).well_defined);
    }
    SECTION("full-rank square Z is always well-defined") {
        for (int k = 0; k <= 4; ++k) CHECK(well_defined_tnn(ExactMatrix::identity(4), k).well_defined);
    }
    SECTION("zero Z fails for k >= 1 with the coordinate-line witness") {
        const AmplituhedronVerdict verdict = well_defined_tnn(ExactMatrix(1, 4), 1);
        REQUIRE_FALSE(verdict.well_defined);
        CHECK(verdict.d == 0);
        const Subspace e1 = row_reduce(mat({{1, 0, 0, 0}}));
        CHECK(*verdict.witness_subspace == e1);
    }
    SECTION("input validation") {
        CHECK_THROWS_AS(well_defined_tnn(mat({{1, 0}}), 3), std::invalid_argument);
        CHECK_THROWS_AS(well_defined_tnn(mat({{1}, {0}, {1}}), 1), std::invalid_argument);
    }
}

TEST_CASE("well_defined_tp") {
    const ExactMatrix z = mat({{2, -1, 1, 1}, {1, 2, -1, 3}});
    SECTION("paper example is TP-well-defined for k <= 1") {
        CHECK(well_defined_tp(z, 0).well_defined);
        CHECK(well_defined_tp(z, 1).well_defined);
        CHECK_FALSE(well_defined_tp(z, 2).well_defined);
    }
    SECTION("kernel spanned by the all-ones vector fails at k = 1") {
        // Rows sum orthogonal to (1,1,1): kernel = span{(1,1,1)}, varbar = 0.
        const ExactMatrix zz = mat({{1, -1, 0}, {0, 1, -1}});
        REQUIRE(kernel(zz).contains(vec({1, 1, 1})));
        const AmplituhedronVerdict verdict = well_defined_tp(zz, 1);
        REQUIRE_FALSE(verdict.well_defined);
        REQUIRE(verdict.witness_vector.has_value());
        CHECK(varbar(sign_vector_of(*verdict.witness_vector)) == 0);
        CHECK(is_tp(*verdict.witness_subspace));
        CHECK(rank_of_image(zz, *verdict.witness_subspace) == 0);
    }
    SECTION("k = 0 is vacuously well-defined") {
        CHECK(well_defined_tp(mat({{0, 0, 0}}), 0).well_defined);
    }
    SECTION("TNN well-definedness implies TP well-definedness") {
        std::mt19937_64 rng(701);
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<int> rows(1, 3);
            std::uniform_int_distribution<int> cols(2, 6);
            const int n = cols(rng);
            const ExactMatrix z = testing::random_matrix(rng, std::min(rows(rng), n), n);
            for (int k = 0; k <= n; ++k) {
                if (well_defined_tnn(z, k).well_defined) {
                    INFO("n=" << n << " k=" << k);
                    CHECK(well_defined_tp(z, k).well_defined);
                }
            }
        }
    }
}

TEST_CASE("criterion verdict equals oracle verdict on random Z") {
    std::mt19937_64 rng(702);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> rows(1, 4);
        std::uniform_int_distribution<int> cols(2, 6);
        const int n = cols(rng);
        const int r = std::min(rows(rng), n);
        const ExactMatrix z = testing::random_matrix(rng, r, n);
        const Subspace w = row_reduce(z);
        for (int k = 0; k <= std::min(n, w.dim()); ++k) {
            INFO("n=" << n << " r=" << r << " d=" << w.dim() << " k=" << k);
            CHECK(well_defined_tnn(z, k).well_defined == oracle::amplituhedron_brute(z, k));
        }
    }
}

TEST_CASE("extend_nonneg") {
    SECTION("the paper's 4x9 interval matrix") {
        const std::vector<Rational> v = vec({2, 5, 0, -1, -4, -1, 0, 0, 3});
        const Subspace ext = extend_nonneg(v, 4);
        const Subspace expected = row_reduce(mat({{2, 5, 0, 0, 0, 0, 0, 0, 0},
                                                  {0, 0, 0, -1, -4, -1, 0, 0, 0},
                                                  {0, 0, 0, 0, 0, 0, 1, 1, 0},
                                                  {0, 0, 0, 0, 0, 0, 0, 0, 3}}));
        CHECK(ext == expected);
        CHECK(ext.contains(v));
        CHECK(is_tnn(ext));
    }
    SECTION("the section-4 example extension") {
        const Subspace ext = extend_nonneg(vec({1, -3, -5, 0}), 2);
        CHECK(ext == row_reduce(mat({{1, 0, 0, 0}, {0, -3, -5, 0}})));
    }
    SECTION("strictly positive vector with k = 1 is its own span") {
        const std::vector<Rational> v = vec({2, 1, 5});
        CHECK(extend_nonneg(v, 1) == row_reduce(mat({{2, 1, 5}})));
    }
    SECTION("rejects var(v) > k-1 with the obstruction") {
        CHECK_THROWS_WITH(extend_nonneg(vec({1, -1, 1}), 2),
                          Catch::Matchers::ContainsSubstring("var(v) = 2"));
    }
    SECTION("random vectors: output contains v, is TNN, has dim k") {
        std::mt19937_64 rng(703);
        std::uniform_int_distribution<int> len(1, 7);
        std::uniform_int_distribution<int> entry(-3, 3);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = len(rng);
            std::vector<Rational> v(static_cast<std::size_t>(n));
            bool nonzero = false;
            for (auto& x : v) {
                x = entry(rng);
                if (x != 0) nonzero = true;
            }
            if (!nonzero) continue;
            const int lo = var(sign_vector_of(v)) + 1;
            for (int k = lo; k <= n; ++k) {
                const Subspace ext = extend_nonneg(v, k);
                CHECK(ext.dim() == k);
                CHECK(ext.contains(v));
                CHECK(is_tnn(ext));
            }
        }
    }
}

TEST_CASE("extend_pos") {
    SECTION("no zeros, varbar 0, k = 1: the span itself") {
        const Subspace ext = extend_pos(vec({2, 3, 1}), 1);
        CHECK(ext == row_reduce(mat({{2, 3, 1}})));
        CHECK(is_tp(ext));
    }
    SECTION("k = n accepts the fully alternating vector") {
        const Subspace ext = extend_pos(vec({1, -1, 1}), 3);
        CHECK(ext.dim() == 3);
        CHECK(ext.contains(vec({1, -1, 1})));
        CHECK(is_tp(ext));
    }
    SECTION("varbar gate") {
        // varbar((1,0,-1,0,1)) = 2 (each zero sits between opposite signs,
        // so every completion changes sign exactly twice): rejected for
        // k <= 2, accepted from k = 3 on.
        CHECK(varbar(sign_vector_of(vec({1, 0, -1, 0, 1}))) == 2);
        CHECK_THROWS_AS(extend_pos(vec({1, 0, -1, 0, 1}), 2), std::invalid_argument);
        const Subspace ext = extend_pos(vec({1, 0, -1, 0, 1}), 3);
        CHECK(ext.contains(vec({1, 0, -1, 0, 1})));
        CHECK(is_tp(ext));
        // A fully alternating vector is rejected below k = n.
        CHECK_THROWS_AS(extend_pos(vec({1, -1, 1, -1, 1}), 4), std::invalid_argument);
        CHECK(is_tp(extend_pos(vec({1, -1, 1, -1, 1}), 5)));
    }
    SECTION("random vectors: output contains v and is TP") {
        std::mt19937_64 rng(704);
        std::uniform_int_distribution<int> len(1, 6);
        std::uniform_int_distribution<int> entry(-3, 3);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = len(rng);
            std::vector<Rational> v(static_cast<std::size_t>(n));
            bool nonzero = false;
            for (auto& x : v) {
                x = entry(rng);
                if (x != 0) nonzero = true;
            }
            if (!nonzero) continue;
            const int lo = varbar(sign_vector_of(v)) + 1;
            for (int k = lo; k <= n; ++k) {
                const Subspace ext = extend_pos(v, k);
                CHECK(ext.dim() == k);
                CHECK(ext.contains(v));
                CHECK(is_tp(ext));
            }
        }
    }
}

TEST_CASE("counterexample_subspace") {
    SECTION("paper example at k = 2") {
        const ExactMatrix z = mat({{2, -1, 1, 1}, {1, 2, -1, 3}});
        const Subspace v = counterexample_subspace(z, 2);
        CHECK(v == row_reduce(mat({{1, 0, 0, 0}, {0, -3, -5, 0}})));
        CHECK(is_tnn(v));
        CHECK(rank_of_image(z, v) == 1);
    }
    SECTION("zero Z at k = 1 gives a coordinate line") {
        const Subspace v = counterexample_subspace(ExactMatrix(2, 4), 1);
        CHECK(v == row_reduce(mat({{1, 0, 0, 0}})));
    }
    SECTION("rejected when the map is well-defined") {
        CHECK_THROWS_AS(counterexample_subspace(ExactMatrix::identity(3), 2), std::invalid_argument);
    }
    SECTION("random failing instances produce rank-deficient TNN subspaces") {
        std::mt19937_64 rng(705);
        int found = 0;
        while (found < 20) {
            std::uniform_int_distribution<int> rows(1, 3);
            std::uniform_int_distribution<int> cols(3, 6);
            const int n = cols(rng);
            const ExactMatrix z = testing::random_matrix(rng, std::min(rows(rng), n - 1), n);
            for (int k = 1; k <= n; ++k) {
                if (well_defined_tnn(z, k).well_defined) continue;
                const Subspace v = counterexample_subspace(z, k);
                CHECK(is_tnn(v));
                CHECK(v.dim() == k);
                CHECK(rank_of_image(z, v) < k);
                ++found;
                break;
            }
        }
    }
}
