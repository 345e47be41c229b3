#include <doctest.h>

#include "kntw/errors.hpp"
#include "kntw/exact_treewidth.hpp"
#include "kntw/theorems.hpp"

using namespace kntw;

TEST_SUITE("theorems") {
    TEST_CASE("thresholds") {
        CHECK(kneser_threshold(3, 2) == 24);
        CHECK(kneser_threshold(2, 1) == 12);
        CHECK(kneser_t1_threshold(3) == 29);
        CHECK(johnson_complement_threshold(2) == 6);
        CHECK(johnson_complement_threshold(4) == 8);
        CHECK(johnson_complement_threshold(7) == 14);
        CHECK(balance_threshold(3, 2, Rational(2, 3)) == 16);  // 4/(1/3) + 4
        CHECK(balance_threshold(3, 1, Rational(3, 4)) == 34);
    }

    TEST_CASE("generalized Kneser formula") {
        auto v = tw_formula_gkneser({24, 3, 2});
        CHECK(v.predicted_tw == 2001);
        CHECK(v.applicable);
        CHECK(v.regime == "C(n,k)-C(n-t,k-t)-1");
        auto below = tw_formula_gkneser({23, 3, 2});
        CHECK_FALSE(below.applicable);
        CHECK(below.predicted_tw == binomial(23, 3) - 21 - 1);
        CHECK(tw_formula_gkneser({29, 3, 1}).applicable);
        CHECK_FALSE(tw_formula_gkneser({28, 3, 1}).applicable);
    }

    TEST_CASE("Johnson complement formula, every row") {
        CHECK(tw_formula_johnson_complement(4, 2).predicted_tw == 1);
        CHECK(tw_formula_johnson_complement(5, 2).predicted_tw == 4);
        CHECK(tw_formula_johnson_complement(5, 3).predicted_tw == 4);
        CHECK(tw_formula_johnson_complement(6, 3).predicted_tw == 14);
        CHECK(tw_formula_johnson_complement(6, 2).predicted_tw == 9);
        CHECK(tw_formula_johnson_complement(7, 2).predicted_tw == 14);
        CHECK(tw_formula_johnson_complement(7, 3).regime == "C(n,k)-n+k-2");
        CHECK(tw_formula_johnson_complement(7, 3).predicted_tw == 35 - 7 + 3 - 2);
        CHECK(tw_formula_johnson_complement(8, 4).regime == "C(n,k)-n+k-2");
        CHECK(tw_formula_johnson_complement(7, 4).regime == "C(n,k)-k-2");
        CHECK_THROWS_AS((void)tw_formula_johnson_complement(4, 3), InvalidInput);
        CHECK_THROWS_AS((void)tw_formula_johnson_complement(5, 1), InvalidInput);
    }

    TEST_CASE("complement formula is symmetric under k -> n-k") {
        for (int n = 4; n <= 30; ++n)
            for (int k = 2; k + 2 <= n; ++k) {
                if (n - k < 2) continue;
                CAPTURE(n);
                CAPTURE(k);
                REQUIRE(tw_formula_johnson_complement(n, k).predicted_tw ==
                        tw_formula_johnson_complement(n, n - k).predicted_tw);
            }
    }

    TEST_CASE("complement formula matches exact treewidth on small cases") {
        for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}, {6, 2}, {6, 3}, {6, 4}, {7, 2}}) {
            CAPTURE(n);
            CAPTURE(k);
            auto exact = exact_tw(build_johnson_complement(n, k));
            REQUIRE(exact.is_exact());
            CHECK(BigInt(exact.upper) == tw_formula_johnson_complement(n, k).predicted_tw);
        }
    }

    TEST_CASE("Johnson complement with k = 2 agrees with the Kneser formula") {
        // K(n,2,1) is the complement of J(n,2)
        for (int n = 12; n <= 40; ++n)
            CHECK(tw_formula_johnson_complement(n, 2).predicted_tw ==
                  tw_formula_gkneser({n, 2, 1}).predicted_tw);
    }

    TEST_CASE("inequalities at their thresholds") {
        for (int k = 2; k <= 6; ++k)
            for (int t = 1; t < k; ++t) {
                const auto n0 = static_cast<int>(kneser_threshold(k, t));
                for (int n = n0; n <= n0 + 50; ++n) {
                    ParamTriple p(n, k, t);
                    REQUIRE(star_concentration_inequality(p));
                    REQUIRE(upper_bound_dominance(p));
                }
                for (auto prob : {Rational(2, 3), Rational(3, 4)}) {
                    const auto n1 = static_cast<int>(balance_threshold(k, t, prob));
                    for (int n = n1; n <= n1 + 50; ++n) REQUIRE(separator_balance_inequality({n, k, t}, prob));
                }
            }
    }

    TEST_CASE("inequalities can fail below threshold") {
        CHECK_FALSE(star_concentration_inequality({5, 3, 2}));
        // non-neighbours of a vertex (itself included): 3·21 + 1 = 64; minus α = 22, minus 1
        CHECK(dominance_slack({24, 3, 2}) == 41);
        CHECK_THROWS_AS((void)star_concentration_inequality({4, 3, 2}), InvalidInput);
        CHECK_THROWS_AS((void)separator_balance_inequality({30, 3, 2}, Rational(1, 2)), InvalidInput);
    }
}
