#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "kntw/errors.hpp"
#include "kntw/exact_treewidth.hpp"
#include "kntw/separators.hpp"

using namespace kntw;

namespace {

const Rational two_thirds(2, 3);

Graph path(int n) {
    Graph g(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_SUITE("separators") {
    TEST_CASE("ratio must lie in [2/3, 1)") {
        CHECK_NOTHROW(check_separator_ratio(two_thirds));
        CHECK_NOTHROW(check_separator_ratio(Rational(99, 100)));
        CHECK_THROWS_AS(check_separator_ratio(Rational(1, 2)), InvalidInput);
        CHECK_THROWS_AS(check_separator_ratio(Rational(1)), InvalidInput);
        CHECK_THROWS_AS((void)check_p_separator(path(3), VertexSet(3), Rational(3, 5)), InvalidInput);
    }

    TEST_CASE("the empty set never separates a connected graph") {
        for (int n = 1; n <= 6; ++n) CHECK_FALSE(check_p_separator(path(n), VertexSet(n), two_thirds).balanced);
    }

    TEST_CASE("removing everything is vacuously balanced") {
        auto r = check_p_separator(path(4), VertexSet::full(4), two_thirds);
        CHECK(r.balanced);
        CHECK(r.components.empty());
    }

    TEST_CASE("middle of a path") {
        auto r = check_p_separator(path(7), VertexSet::of(7, std::vector<int>{3}), two_thirds);
        CHECK(r.balanced);
        CHECK(r.component_sizes == std::vector<std::size_t>{3, 3});
        REQUIRE(r.partition.has_value());
        CHECK(r.partition->size_a == 3);
        CHECK(r.partition->size_b == 3);

        auto skew = check_p_separator(path(7), VertexSet::of(7, std::vector<int>{1}), two_thirds);
        CHECK_FALSE(skew.balanced);  // 5 > (2/3)·6
    }

    TEST_CASE("threshold scales with the vertices left, not the host") {
        // one vertex of K_5 left: 1 <= (2/3)·5 but 1 > (2/3)·1
        auto x = VertexSet::of(5, std::vector<int>{0, 1, 2, 3});
        CHECK_FALSE(check_p_separator(complete_graph(5), x, two_thirds).balanced);
        auto z = VertexSet::of(5, std::vector<int>{2});
        CHECK(check_p_separator(path(5), z, two_thirds).balanced);  // 2 and 2 out of 4
    }

    TEST_CASE("component bipartition sides respect the bound") {
        std::mt19937_64 rng(8);
        for (int i = 0; i < 200; ++i) {
            const int n = 3 + static_cast<int>(rng() % 10);
            auto g = oracle::random_graph(rng, n, 0.2);
            VertexSet x(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                if (rng() % 4 == 0) x.insert(static_cast<std::size_t>(v));
            auto r = check_p_separator(g, x, two_thirds);
            const std::size_t rest = static_cast<std::size_t>(n) - x.count();
            std::size_t total = 0;
            for (auto s : r.component_sizes) total += s;
            REQUIRE(total == rest);
            if (r.balanced && !r.components.empty()) {
                REQUIRE(r.partition.has_value());
                REQUIRE(r.partition->size_a + r.partition->size_b == rest);
                REQUIRE(3 * r.partition->size_a <= 2 * rest);
                REQUIRE(3 * r.partition->size_b <= 2 * rest);
            }
        }
    }

    TEST_CASE("minimum orders") {
        CHECK(min_p_separator_order(build_generalized_kneser({5, 2, 1}), two_thirds) == 4);
        CHECK(min_p_separator_order(edgeless_graph(4), two_thirds) == 0);
        // one vertex left would be a component larger than (2/3)·1
        CHECK(min_p_separator_order(complete_graph(5), two_thirds) == 5);
        auto best = min_p_separator(path(7), two_thirds);
        CHECK(best.order == 1);
        CHECK(check_p_separator(path(7), best.witness, two_thirds).balanced);
        CHECK_THROWS_AS((void)min_p_separator(edgeless_graph(17), two_thirds), ResourceError);
    }

    TEST_CASE("search agrees with brute force and stays below treewidth + 1") {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 80; ++i) {
            const int n = 1 + static_cast<int>(rng() % 10);
            auto g = oracle::random_graph(rng, n, 0.45);
            const auto order = min_p_separator_order(g, two_thirds);
            REQUIRE(static_cast<int>(order) == oracle::min_separator_order(g, 2, 3));
            REQUIRE(static_cast<long>(order) <= exact_tw(g).upper + 1);
        }
    }
}
