#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "kntw/errors.hpp"
#include "kntw/graph.hpp"

using namespace kntw;

TEST_SUITE("graphs") {
    TEST_CASE("Petersen graph is K(5,2,1)") {
        auto g = build_generalized_kneser({5, 2, 1});
        CHECK(g.num_vertices() == 10);
        CHECK(g.num_edges() == 15);
        CHECK(g.max_degree() == 3);
        CHECK(g.min_degree() == 3);
        CHECK(maximum_independent_set(g).count() == 4);
        CHECK(brute_force_independence(g) == 4);
        REQUIRE(g.labels().has_value());
        CHECK((*g.labels())[0] == KSubset(5, {1, 2}));
        CHECK(g.vertex_of(KSubset(5, {4, 5})) == 10);
        CHECK(g.family().describe() == "gkneser 5 2 1");
    }

    TEST_CASE("K(6,3,2) counts") {
        auto g = build_generalized_kneser({6, 3, 2});
        CHECK(g.num_vertices() == 20);
        CHECK(g.num_edges() == 100);
        CHECK(g.max_degree() == 10);
        CHECK(g.min_degree() == 10);
        CHECK(maximum_independent_set(g).count() == 4);
    }

    TEST_CASE("complement of J(4,2) is a perfect matching") {
        auto g = build_johnson_complement(4, 2);
        CHECK(g.num_vertices() == 6);
        CHECK(g.num_edges() == 3);
        CHECK(g.max_degree() == 1);
        CHECK(g == build_generalized_kneser({4, 2, 1}));
    }

    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(ParamTriple(5, 2, 2), InvalidInput);
        CHECK_THROWS_AS(ParamTriple(5, 2, 0), InvalidInput);
        CHECK_THROWS_AS(ParamTriple(1, 2, 1), InvalidInput);
        CHECK_THROWS_AS((void)build_johnson(3, 0), InvalidInput);
    }

    TEST_CASE("size cap") {
        CHECK_THROWS_AS((void)build_generalized_kneser({30, 4, 1}), ResourceError);
        CHECK_NOTHROW((void)build_generalized_kneser({24, 3, 2}, GraphLimits{3000}));
    }

    TEST_CASE("degree formula and regularity across parameters") {
        for (int n = 2; n <= 9; ++n)
            for (int k = 2; k <= n; ++k)
                for (int t = 1; t < k; ++t) {
                    ParamTriple p(n, k, t);
                    auto g = build_generalized_kneser(p);
                    const auto deg = static_cast<std::size_t>(degree_formula(p));
                    REQUIRE(g.max_degree() == deg);
                    REQUIRE(g.min_degree() == deg);
                    REQUIRE(BigInt(g.num_vertices()) * deg == 2 * BigInt(g.num_edges()));
                    REQUIRE(BigInt(g.num_vertices()) == binomial(n, k));
                }
    }

    TEST_CASE("adjacency follows the intersection rule") {
        auto sets = oracle::colex_subsets(7, 3);
        auto g = build_generalized_kneser({7, 3, 2});
        auto j = build_johnson(7, 3);
        auto jc = build_johnson_complement(7, 3);
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = a + 1; b < sets.size(); ++b) {
                const int c = oracle::common(sets[a], sets[b]);
                const int u = static_cast<int>(a), v = static_cast<int>(b);
                REQUIRE(g.adjacent(u, v) == (c < 2));
                REQUIRE(j.adjacent(u, v) == (c == 2));
                REQUIRE(jc.adjacent(u, v) == (c <= 1));
            }
    }

    TEST_CASE("complement swaps Johnson and its complement") {
        auto j = build_johnson(6, 3);
        auto jc = complement(j);
        CHECK(jc == build_johnson_complement(6, 3));
        CHECK(jc.family().kind == FamilyKind::johnson_complement);
        CHECK(complement(jc).family().kind == FamilyKind::johnson);
        CHECK(jc.num_edges() + j.num_edges() == 20 * 19 / 2);
    }

    TEST_CASE("EKR bound agrees with exact search where it applies") {
        for (int n = 2; n <= 8; ++n)
            for (int k = 2; k <= n; ++k)
                for (int t = 1; t < k; ++t) {
                    ParamTriple p(n, k, t);
                    auto ekr = ekr_independence_number(p);
                    if (!ekr.applicable || binomial(n, k) > 40) continue;
                    auto g = build_generalized_kneser(p);
                    auto mis = maximum_independent_set(g);
                    REQUIRE(g.is_independent(mis));
                    REQUIRE(BigInt(mis.count()) == ekr.value);
                    auto star = ekr_star_family(g);
                    REQUIRE(g.is_independent(star));
                    REQUIRE(BigInt(star.count()) == ekr.value);
                }
    }

    TEST_CASE("independence search agrees with subset enumeration") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 60; ++i) {
            auto g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 13), 0.3);
            auto mis = maximum_independent_set(g);
            REQUIRE(g.is_independent(mis));
            REQUIRE(static_cast<int>(mis.count()) == oracle::independence_number(g));
        }
        CHECK_THROWS_AS((void)maximum_independent_set(edgeless_graph(41)), ResourceError);
    }

    TEST_CASE("edges, loops and vertex removal") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        CHECK(g.num_edges() == 1);
        CHECK_THROWS_AS(g.add_edge(2, 2), InvalidInput);
        CHECK_THROWS_AS(g.add_edge(0, 4), InvalidInput);
        g.add_edge(2, 3);
        g.add_edge(1, 2);
        auto h = g.without(VertexSet::of(4, std::vector<int>{1}));
        CHECK(h.num_vertices() == 3);
        CHECK(h.edges() == std::vector<std::pair<int, int>>{{1, 2}});
        CHECK(complete_graph(5).num_edges() == 10);
        CHECK(edgeless_graph(5).num_edges() == 0);
    }

    TEST_CASE("family tags round-trip through text") {
        for (auto text : {"gkneser 5 2 1", "johnson 6 3", "johnson-complement 6 3", "generic"})
            CHECK(FamilyTag::parse(text).describe() == text);
        CHECK_THROWS_AS((void)FamilyTag::parse("gkneser 5 2"), InvalidInput);
        CHECK_THROWS_AS((void)FamilyTag::parse("petersen"), InvalidInput);
    }

    TEST_CASE("isomorphism") {
        auto petersen = build_generalized_kneser({5, 2, 1});
        // relabel by reversing vertex order
        Graph shuffled(10);
        for (auto [u, v] : petersen.edges()) shuffled.add_edge(9 - u, 9 - v);
        CHECK(isomorphic(petersen, shuffled));
        auto other = petersen;
        REQUIRE_FALSE(petersen.adjacent(0, 1));  // {1,2} and {1,3} meet
        other.add_edge(0, 1);
        CHECK_FALSE(isomorphic(petersen, other));
        CHECK(isomorphic(build_johnson_complement(5, 3), build_johnson_complement(5, 2)));
    }
}
