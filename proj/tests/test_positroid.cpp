#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "omsv/oracle.hpp"
#include "omsv/positroid.hpp"

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

const std::vector<std::vector<long>> kBasisExample{{2, 1, 0, 0, 3}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 1}};

Subset lex_min(const std::vector<Subset>& sets) { return *std::min_element(sets.begin(), sets.end()); }

}  // namespace

TEST_CASE("matroid_of") {
    const Subspace v = row_reduce(mat(kBasisExample));
    const auto m = matroid_of(v);
    CHECK(std::find(m.begin(), m.end(), Subset{1, 3, 5}) != m.end());
    CHECK(std::find(m.begin(), m.end(), Subset{1, 4, 5}) == m.end());
    CHECK(matroid_of(row_reduce(mat({{1, 0, 0}, {0, 1, 0}}))) == std::vector<Subset>{{1, 2}});
    CHECK(matroid_of(row_reduce(mat({{1, 1, 2, 3}, {0, 1, 1, 1}}))).size() == 6);
}

TEST_CASE("alternating_sets") {
    SECTION("the paper's seven sets, including one non-basis") {
        const auto a = alternating_sets(row_reduce(mat(kBasisExample)));
        const std::vector<Subset> expected{{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4},
                                           {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};
        CHECK(a == expected);
        const auto m = matroid_of(row_reduce(mat(kBasisExample)));
        CHECK(std::find(m.begin(), m.end(), Subset{2, 4, 5}) == m.end());
    }
    SECTION("A does not determine M") {
        const Subspace v = row_reduce(mat({{1, 0, -1}, {0, 1, 0}}));
        const Subspace w = row_reduce(mat({{1, 0, -1}, {0, 1, 1}}));
        const auto all = all_subsets(3, 2);
        CHECK(alternating_sets(v) == all);
        CHECK(alternating_sets(w) == all);
        CHECK(matroid_of(v) != matroid_of(w));
        const auto mv = matroid_of(v);
        CHECK(std::find(mv.begin(), mv.end(), Subset{1, 3}) == mv.end());
    }
    SECTION("identity block") {
        CHECK(alternating_sets(row_reduce(mat({{1, 0, 0}, {0, 1, 0}}))) == std::vector<Subset>{{1, 2}});
    }
    SECTION("M(V) is always contained in A(V)") {
        std::mt19937_64 rng(801);
        for (int trial = 0; trial < 15; ++trial) {
            const Subspace v = testing::random_subspace(rng, 2, 5);
            const auto m = matroid_of(v);
            const auto a = alternating_sets(v);
            for (const Subset& b : m) CHECK(std::find(a.begin(), a.end(), b) != a.end());
        }
    }
}

TEST_CASE("gale_min_of") {
    SECTION("the paper's A(V) has Gale minimum {1,3,4}") {
        const auto a = alternating_sets(row_reduce(mat(kBasisExample)));
        const auto minimum = gale_min_of(a, GaleOrder(5, 1));
        REQUIRE(minimum.has_value());
        CHECK(*minimum == Subset{1, 3, 4});
    }
    SECTION("non-TNN example has no Gale minimum") {
        const Subspace v = row_reduce(
            mat({{1, 0, -1, -1, 1, 0}, {0, 1, 1, 2, 0, 0}, {0, 0, 0, 0, 0, 1}}));
        REQUIRE_FALSE(is_tnn(v));
        const auto a = alternating_sets(v);
        // The paper's witnesses for incomparability.
        CHECK(std::find(a.begin(), a.end(), Subset{1, 2, 5}) != a.end());
        CHECK(std::find(a.begin(), a.end(), Subset{1, 3, 4}) != a.end());
        CHECK(std::find(a.begin(), a.end(), Subset{1, 2, 3}) == a.end());
        CHECK(std::find(a.begin(), a.end(), Subset{1, 2, 4}) == a.end());
        CHECK_FALSE(gale_min_of(a, GaleOrder(6, 1)).has_value());
    }
    SECTION("singleton family") {
        CHECK(*gale_min_of({{2, 4}}, GaleOrder(5, 1)) == Subset{2, 4});
    }
}

TEST_CASE("schubert_from_signs") {
    SECTION("paper example") {
        CHECK(schubert_from_signs(row_reduce(mat(kBasisExample))) == Subset{1, 3, 4});
    }
    SECTION("identity block") {
        CHECK(schubert_from_signs(row_reduce(mat({{1, 0, 0}, {0, 1, 0}}))) == Subset{1, 2});
    }
    SECTION("rejects non-TNN input") {
        CHECK_THROWS_AS(schubert_from_signs(row_reduce(mat({{1, 0, -2, 3}, {0, 2, 1, 4}}))),
                        std::invalid_argument);
    }
    SECTION("equals the lexicographic minimum of the matroid on random TNN subspaces") {
        std::mt19937_64 rng(802);
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<int> amb(2, 6);
            const int n = amb(rng);
            std::uniform_int_distribution<int> dim(1, n - 1);
            const Subspace v = testing::random_tnn_subspace(rng, dim(rng), n);
            CHECK(schubert_from_signs(v) == lex_min(matroid_of(v)));
        }
    }
}

TEST_CASE("lex min equals Gale min of the matroid for arbitrary subspaces") {
    std::mt19937_64 rng(803);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> amb(2, 6);
        const int n = amb(rng);
        std::uniform_int_distribution<int> dim(1, n);
        const Subspace v = testing::random_subspace(rng, dim(rng), n);
        const auto m = matroid_of(v);
        const auto gale = gale_min_of(m, GaleOrder(n, 1));
        REQUIRE(gale.has_value());
        CHECK(*gale == lex_min(m));
    }
}

TEST_CASE("necklace_of") {
    SECTION("generic Gr_{2,4}") {
        const GrassmannNecklace neck = necklace_of(row_reduce(mat({{1, 1, 2, 3}, {0, 1, 1, 1}})));
        REQUIRE(matroid_of(row_reduce(mat({{1, 1, 2, 3}, {0, 1, 1, 1}}))).size() == 6);
        CHECK(neck.entries == std::vector<Subset>{{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    }
    SECTION("single-basis subspace repeats its basis") {
        const GrassmannNecklace neck = necklace_of(row_reduce(mat({{1, 0, 0}, {0, 1, 0}})));
        CHECK(neck.entries == std::vector<Subset>{{1, 2}, {1, 2}, {1, 2}});
    }
}

TEST_CASE("necklace_from_signs equals necklace_of") {
    SECTION("paper example") {
        const Subspace v = row_reduce(mat(kBasisExample));
        CHECK(necklace_from_signs(v).entries == necklace_of(v).entries);
    }
    SECTION("generic TNN Gr_{2,4}") {
        ExactMatrix vdm(2, 4);
        for (int i = 1; i <= 4; ++i) {
            vdm(0, i - 1) = 1;
            vdm(1, i - 1) = i;
        }
        const Subspace v = row_reduce(vdm);
        CHECK(necklace_from_signs(v).entries == std::vector<Subset>{{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    }
    SECTION("random TNN instances") {
        std::mt19937_64 rng(804);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<int> amb(2, 6);
            const int n = amb(rng);
            std::uniform_int_distribution<int> dim(1, n - 1);
            const Subspace v = testing::random_tnn_subspace(rng, dim(rng), n);
            CHECK(necklace_from_signs(v).entries == necklace_of(v).entries);
        }
    }
}

namespace {

/// Membership condition defining A_j: the vector alternates on J except
/// precisely from component max(J intersect [1,j)) to component
/// min(J intersect [j,n]) (when both exist).
bool qualifies_for_aj(const SignVector& x, const Subset& J, int j) {
    std::optional<int> left_max;
    std::optional<int> right_min;
    for (int e : J) {
        if (e < j) left_max = e;
        if (e >= j && !right_min) right_min = e;
    }
    for (std::size_t t = 0; t + 1 < J.size(); ++t) {
        const int a = J[t];
        const int b = J[t + 1];
        if (x.at(a) == 0 || x.at(b) == 0) return false;
        const bool exception_pair = left_max && right_min && a == *left_max && b == *right_min;
        if (exception_pair ? (x.at(a) != x.at(b)) : (x.at(a) == x.at(b))) return false;
    }
    return !J.empty() && x.at(J.back()) != 0;
}

}  // namespace

TEST_CASE("necklace membership condition example") {
    // n=5, J={1,3,4,5}, j=3: (+,*,+,-,+) qualifies for A_3, (+,*,-,+,-) does not.
    const Subset J{1, 3, 4, 5};
    CHECK(qualifies_for_aj(SignVector::parse("+++-+"), J, 3));
    CHECK_FALSE(qualifies_for_aj(SignVector::parse("++-+-"), J, 3));
    // For j <= min(J) the condition reduces to plain alternation.
    CHECK(qualifies_for_aj(SignVector::parse("+0-+0"), {1, 3, 4}, 1));
    CHECK_FALSE(qualifies_for_aj(SignVector::parse("+0+-0"), {1, 3, 4}, 1));
}

TEST_CASE("positroid_from_necklace") {
    SECTION("generic necklace yields every 2-subset") {
        GrassmannNecklace neck;
        neck.n = 4;
        neck.k = 2;
        neck.entries = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
        const Positroid p = positroid_from_necklace(neck);
        CHECK(p.bases.size() == 6);
    }
    SECTION("Oh's theorem on the paper example") {
        const Subspace v = row_reduce(mat(kBasisExample));
        const Positroid p = positroid_from_necklace(necklace_of(v));
        CHECK(p.bases == matroid_of(v));
    }
    SECTION("single-basis necklace") {
        GrassmannNecklace neck;
        neck.n = 3;
        neck.k = 2;
        neck.entries = {{1, 2}, {1, 2}, {1, 2}};
        CHECK(positroid_from_necklace(neck).bases == std::vector<Subset>{{1, 2}});
    }
    SECTION("Oh's theorem on random TNN instances") {
        std::mt19937_64 rng(805);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<int> amb(2, 6);
            const int n = amb(rng);
            std::uniform_int_distribution<int> dim(1, n - 1);
            const Subspace v = testing::random_tnn_subspace(rng, dim(rng), n);
            CHECK(positroid_from_necklace(necklace_of(v)).bases == matroid_of(v));
        }
    }
}

TEST_CASE("realizes") {
    const Subspace v = row_reduce(mat(kBasisExample));
    SECTION("the paper's witnesses on {1,3,5}") {
        CHECK(v.contains(vec({2, 1, -1, 0, 3})));
        CHECK(v.contains(vec({2, 1, 1, -4, -1})));
        CHECK(v.contains(vec({2, 1, -1, -4, -1})));
        CHECK(realizes(v, {1, 3, 5}, SignVector::parse("+-+")));
        CHECK(realizes(v, {1, 3, 5}, SignVector::parse("++-")));
        CHECK(realizes(v, {1, 3, 5}, SignVector::parse("+--")));
    }
    SECTION("(+,+,-) is not realized on {1,4,5}") {
        CHECK(v.contains(vec({2, 1, 0, -1, 2})));
        CHECK(realizes(v, {1, 4, 5}, SignVector::parse("+-+")));
        CHECK(realizes(v, {1, 4, 5}, SignVector::parse("+--")));
        CHECK_FALSE(realizes(v, {1, 4, 5}, SignVector::parse("++-")));
    }
    SECTION("empty pattern on the empty set") {
        CHECK(realizes(v, {}, SignVector::zero(0)));
    }
    SECTION("agrees with the oracle covector restriction") {
        std::mt19937_64 rng(806);
        for (int trial = 0; trial < 10; ++trial) {
            const Subspace u = testing::random_subspace(rng, 2, 5);
            const auto covectors = oracle::covectors_of_subspace(u);
            for (const Subset& I : all_subsets(5, 2)) {
                for (int a : {-1, 0, 1})
                    for (int b : {-1, 0, 1}) {
                        const SignVector w{std::vector<std::int8_t>{static_cast<std::int8_t>(a),
                                                                    static_cast<std::int8_t>(b)}};
                        bool oracle_realized = false;
                        for (const SignVector& x : covectors)
                            if (x.restrict_to(I) == w) { oracle_realized = true; break; }
                        CHECK(realizes(u, I, w) == oracle_realized);
                    }
            }
        }
    }
}

TEST_CASE("basis_test_signs") {
    const Subspace v = row_reduce(mat(kBasisExample));
    SECTION("paper verdicts") {
        CHECK(basis_test_signs(v, {1, 3, 5}));
        CHECK_FALSE(basis_test_signs(v, {1, 4, 5}));
    }
    SECTION("k = 5 pattern list") {
        const auto patterns = basis_test_patterns(5);
        REQUIRE(patterns.size() == 5);
        CHECK(patterns[0].str() == "+-+-+");
        CHECK(patterns[1].str() == "++-+-");
        CHECK(patterns[2].str() == "+--+-");
        CHECK(patterns[3].str() == "+-++-");
        CHECK(patterns[4].str() == "+-+--");
    }
    SECTION("equivalent to nonvanishing Plucker coordinates on random TNN subspaces") {
        std::mt19937_64 rng(807);
        for (int trial = 0; trial < 25; ++trial) {
            std::uniform_int_distribution<int> amb(2, 5);
            const int n = amb(rng);
            std::uniform_int_distribution<int> dim(1, n - 1);
            const int k = dim(rng);
            const Subspace v2 = testing::random_tnn_subspace(rng, k, n);
            const PluckerMap p = maximal_minors(v2);
            for (const Subset& J : all_subsets(n, k)) {
                INFO("n=" << n << " k=" << k << " J=" << subset_key(J));
                CHECK(basis_test_signs(v2, J) == (p.at(J) != 0));
            }
        }
    }
    SECTION("rejects non-TNN input") {
        CHECK_THROWS_AS(basis_test_signs(row_reduce(mat({{1, 0, -2, 3}, {0, 2, 1, 4}})), {1, 2}),
                        std::invalid_argument);
    }
}

TEST_CASE("all_but_one_construction") {
    SECTION("j = {1,2}, v = (1,1), n = 3") {
        const Subspace v = all_but_one_construction(3, {1, 2}, vec({1, 1}));
        CHECK(v.dim() == 2);
        CHECK(realizes(v, {1, 2}, SignVector::parse("+-")));
        CHECK_FALSE(realizes(v, {1, 2}, SignVector::parse("++")));
        CHECK(maximal_minors(v).at({1, 2}) == 0);
    }
    SECTION("realizes exactly 2^k - 2 full sign patterns on its target set") {
        std::mt19937_64 rng(808);
        std::uniform_int_distribution<int> entry(1, 3);
        std::uniform_int_distribution<int> flip(0, 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<int> amb(3, 6);
            const int n = amb(rng);
            std::uniform_int_distribution<int> dim(2, n - 1);
            const int k = dim(rng);
            const auto candidates = all_subsets(n, k);
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            const Subset j = candidates[pick(rng)];
            std::vector<Rational> v(static_cast<std::size_t>(k));
            for (auto& x : v) x = make_rational(flip(rng) ? entry(rng) : -entry(rng));
            const Subspace constructed = all_but_one_construction(n, j, v);
            const auto matroid = matroid_of(constructed);
            CHECK(std::find(matroid.begin(), matroid.end(), j) == matroid.end());
            int realized = 0;
            std::vector<std::int8_t> pattern(static_cast<std::size_t>(k), -1);
            for (;;) {
                if (realizes(constructed, j, SignVector{std::vector<std::int8_t>(pattern)})) ++realized;
                std::size_t t = pattern.size();
                bool carried = false;
                while (t-- > 0) {
                    if (pattern[t] < 1) { pattern[t] = 1; carried = true; break; }
                    pattern[t] = -1;
                }
                if (!carried) break;
            }
            INFO("n=" << n << " k=" << k << " j=" << subset_key(j));
            CHECK(realized == (1 << k) - 2);
        }
    }
    SECTION("input validation") {
        CHECK_THROWS_AS(all_but_one_construction(2, {1, 2}, vec({1, 1})), std::invalid_argument);
        CHECK_THROWS_AS(all_but_one_construction(4, {1, 2}, vec({1, 0})), std::invalid_argument);
    }
}

TEST_CASE("realizing all 2^k patterns forces a basis, for arbitrary subspaces") {
    std::mt19937_64 rng(809);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 5;
        const int k = 2;
        const Subspace v = testing::random_subspace(rng, k, n);
        const PluckerMap p = maximal_minors(v);
        for (const Subset& J : all_subsets(n, k)) {
            bool all_realized = true;
            for (int a : {-1, 1})
                for (int b : {-1, 1}) {
                    const SignVector w{std::vector<std::int8_t>{static_cast<std::int8_t>(a),
                                                                static_cast<std::int8_t>(b)}};
                    if (!realizes(v, J, w)) all_realized = false;
                }
            if (all_realized) CHECK(p.at(J) != 0);
        }
    }
}
