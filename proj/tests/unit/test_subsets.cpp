#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "kntw/arith.hpp"
#include "kntw/errors.hpp"
#include "kntw/subsets.hpp"

using namespace kntw;

namespace {

KSubset from_vec(int n, const std::vector<int>& v) { return KSubset::from_elements(n, v); }

}  // namespace

TEST_SUITE("arith") {
    TEST_CASE("binomial matches Pascal's triangle") {
        const auto c = oracle::pascal(62);
        for (int n = 0; n <= 62; ++n)
            for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == c[n][k]);
    }

    TEST_CASE("Pascal's rule holds well past 64 bits") {
        for (int n = 1; n <= 200; ++n)
            for (int k = 1; k < n; ++k)
                REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        CHECK(binomial(200, 100).str() ==
              "90548514656103281165404177077484163874504589675413336841320");
    }

    TEST_CASE("binomial out of range is zero") {
        CHECK(binomial(5, -1) == 0);
        CHECK(binomial(5, 6) == 0);
        CHECK(binomial(-3, 2) == 0);
        CHECK(binomial(0, 0) == 1);
    }

    TEST_CASE("binomial_u64 refuses to overflow") {
        CHECK(binomial_u64(64, 32) == 1832624140942590534ULL);
        CHECK_THROWS_AS((void)binomial_u64(100, 50), ResourceError);
    }

    TEST_CASE("rationals parse exactly") {
        CHECK(parse_rational("2/3") == Rational(2, 3));
        CHECK(parse_rational("4/6") == Rational(2, 3));
        CHECK(parse_rational("1") == Rational(1));
        CHECK_THROWS_AS((void)parse_rational("0.75"), InvalidInput);
        CHECK_THROWS_AS((void)parse_rational("3/0"), InvalidInput);
        CHECK_THROWS_AS((void)parse_rational("abc"), InvalidInput);
        CHECK(to_string(Rational(3, 4)) == "3/4");
        CHECK(ceil(Rational(7, 2)) == 4);
        CHECK(ceil(Rational(-7, 2)) == -3);
        CHECK(ceil(Rational(6)) == 6);
    }
}

TEST_SUITE("subsets") {
    TEST_CASE("colex rank of small examples") {
        CHECK(colex_rank(KSubset(5, {2, 3, 4})) == 4);
        CHECK(colex_rank(KSubset(5, {1, 2, 3})) == 1);
        CHECK(colex_rank(KSubset(5, {3, 4, 5})) == 10);
        CHECK(colex_unrank(1, 5, 3) == KSubset(5, {1, 2, 3}));
    }

    TEST_CASE("colex order agrees with the reversed-lexicographic oracle") {
        for (int n = 1; n <= 9; ++n)
            for (int k = 0; k <= n; ++k) {
                auto expected = oracle::colex_subsets(n, k);
                for (std::size_t i = 0; i < expected.size(); ++i) {
                    auto s = from_vec(n, expected[i]);
                    REQUIRE(colex_rank(s) == i + 1);
                    REQUIRE(colex_unrank(i + 1, n, k) == s);
                    if (i + 1 < expected.size()) {
                        auto succ = s;
                        REQUIRE(next_colex(succ));
                        REQUIRE(succ == from_vec(n, expected[i + 1]));
                        REQUIRE(colex_compare(s, succ) == std::strong_ordering::less);
                    }
                }
                auto last = from_vec(n, expected.back());
                CHECK_FALSE(next_colex(last));
            }
    }

    TEST_CASE("rank and unrank are mutually inverse up to n = 12") {
        for (int n = 1; n <= 12; ++n)
            for (int k = 0; k <= n; ++k) {
                const auto total = binomial_u64(n, k);
                for (std::uint64_t r = 1; r <= total; ++r) REQUIRE(colex_rank(colex_unrank(r, n, k)) == r);
            }
    }

    TEST_CASE("colex is a strict total order on k-sets") {
        auto all = all_subsets(7, 3);
        for (const auto& a : all)
            for (const auto& b : all) {
                auto ab = colex_compare(a, b);
                auto ba = colex_compare(b, a);
                REQUIRE((ab == std::strong_ordering::equal) == (a == b));
                if (ab == std::strong_ordering::less) REQUIRE(ba == std::strong_ordering::greater);
                REQUIRE((ab == std::strong_ordering::less) == (colex_rank(a) < colex_rank(b)));
            }
    }

    TEST_CASE("ground sets wider than one word") {
        KSubset s(130, {1, 64, 65, 129});
        CHECK(s.size() == 4);
        CHECK(s.max_element() == 129);
        CHECK(s.elements() == std::vector<int>{1, 64, 65, 129});
        auto r = colex_rank(KSubset(70, {68, 69, 70}));
        CHECK(r == binomial_u64(70, 3));
        CHECK(colex_unrank(r, 70, 3) == KSubset(70, {68, 69, 70}));
        CHECK(s.complement().size() == 126);
    }

    TEST_CASE("comparing sets of different sizes is an error") {
        CHECK_THROWS_AS((void)colex_compare(KSubset(5, {1, 2}), KSubset(5, {1, 2, 3})), InvalidInput);
        CHECK_THROWS_AS((void)colex_compare(KSubset(5, {1, 2}), KSubset(6, {1, 2})), InvalidInput);
        CHECK(colex_less(KSubset(5, {4, 5}), KSubset(5, {1, 2, 3})));
    }

    TEST_CASE("invalid elements are rejected") {
        CHECK_THROWS_AS(KSubset(5, {0}), InvalidInput);
        CHECK_THROWS_AS(KSubset(5, {6}), InvalidInput);
        CHECK_THROWS_AS(KSubset(5, {2, 2}), InvalidInput);
        CHECK_THROWS_AS((void)colex_unrank(11, 5, 3), InvalidInput);
        CHECK_THROWS_AS((void)colex_unrank(0, 5, 3), InvalidInput);
    }

    TEST_CASE("set families reject duplicates and mixed uniformity") {
        SetFamily f(5, 2);
        CHECK_THROWS_AS(SetFamily(5, {KSubset(5, {1, 2}), KSubset(5, {1, 2})}), InvalidInput);
        CHECK_THROWS_AS(SetFamily(5, {KSubset(5, {1, 2}), KSubset(5, {1, 2, 3})}, 2), InvalidInput);
        SetFamily mixed(5, {KSubset(5, {3}), KSubset(5, {1, 2})});
        CHECK_FALSE(mixed.common_size().has_value());
        CHECK(mixed.sorted().members()[0] == KSubset(5, {3}));
    }

    TEST_CASE("first family and its shadow") {
        auto f = first_family(4, 5, 3);
        REQUIRE(f.size() == 4);
        CHECK(f.members()[0] == KSubset(5, {1, 2, 3}));
        CHECK(f.members()[1] == KSubset(5, {1, 2, 4}));
        CHECK(f.members()[2] == KSubset(5, {1, 3, 4}));
        CHECK(f.members()[3] == KSubset(5, {2, 3, 4}));
        CHECK(shadow(f, 2).size() == 6);
        CHECK(min_shadow_size(2, 5, 3, 2) == 5);
        CHECK_THROWS_AS((void)first_family(11, 5, 3), InvalidInput);
        CHECK_THROWS_AS((void)min_shadow_size(2, 5, 3, 3), InvalidInput);
    }

    TEST_CASE("shadow matches the brute-force oracle") {
        std::mt19937_64 rng(7);
        for (int round = 0; round < 200; ++round) {
            const int n = 4 + static_cast<int>(rng() % 5);
            const int k = 2 + static_cast<int>(rng() % (n - 2));
            const int g = static_cast<int>(rng() % k);
            auto pool = oracle::colex_subsets(n, k);
            std::shuffle(pool.begin(), pool.end(), rng);
            pool.resize(1 + rng() % pool.size());
            std::vector<KSubset> members;
            for (const auto& v : pool) members.push_back(from_vec(n, v));
            auto ours = shadow(SetFamily(n, members, k), g);
            auto expected = oracle::shadow(pool, g);
            REQUIRE(ours.size() == expected.size());
            for (const auto& e : expected) REQUIRE(ours.contains(from_vec(n, e)));
            for (std::size_t i = 1; i < ours.size(); ++i)
                REQUIRE(colex_compare(ours.members()[i - 1], ours.members()[i]) == std::strong_ordering::less);
        }
    }

    TEST_CASE("no family of m sets has a smaller shadow than the first m") {
        // exhaustive over all m-subsets of C(5,3) = 10 sets
        const int n = 5, k = 3, g = 2;
        auto pool = oracle::colex_subsets(n, k);
        for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
            std::vector<std::vector<int>> fam;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1) fam.push_back(pool[i]);
            REQUIRE(oracle::shadow(fam, g).size() >= min_shadow_size(fam.size(), n, k, g));
        }
    }

    TEST_CASE("layered shadow is the union of layer shadows") {
        SetFamily top(6, {KSubset(6, {1, 2, 3, 4}), KSubset(6, {3, 4, 5, 6})}, 4);
        SetFamily mid(6, {KSubset(6, {1, 5, 6}), KSubset(6, {2, 3, 4})}, 3);
        std::vector<SetFamily> layers{top, mid};
        auto both = layered_shadow(layers, 2);
        auto expected = oracle::shadow({{1, 2, 3, 4}, {3, 4, 5, 6}, {1, 5, 6}, {2, 3, 4}}, 2);
        CHECK(both.size() == expected.size());
        for (const auto& e : expected) CHECK(both.contains(from_vec(6, e)));
    }

    TEST_CASE("restriction partitions the family") {
        auto f = all_subsets(6, 3);
        KSubset x(6, {1, 2});
        auto r = restrict_to(f, x);
        CHECK(r.containing.size() == 4);
        CHECK(r.containing.size() + r.avoiding.size() == f.size());
        for (const auto& s : r.containing) CHECK(x.is_subset_of(s));
        for (const auto& s : r.avoiding) CHECK_FALSE(x.is_subset_of(s));
    }

    TEST_CASE("star reduction, contained mode") {
        SetFamily f(5, {KSubset(5, {1, 2, 3}), KSubset(5, {1, 2, 5})}, 3);
        auto reduced = star_contained(f, KSubset(5, {1, 2}));
        CHECK(reduced == SetFamily(5, {KSubset(5, {3}), KSubset(5, {5})}));
        CHECK_THROWS_AS((void)star_contained(SetFamily(5, {KSubset(5, {1, 3, 4})}), KSubset(5, {1, 2})),
                        InvalidInput);
    }

    TEST_CASE("star reduction, complement mode groups by class") {
        // x = {1,2}, n = 6, k = 3; F = {1,3,4}: [n]\F = {2,5,6}, |x ∩ that| = 1, a = 1
        SetFamily f(6, {KSubset(6, {1, 3, 4}), KSubset(6, {3, 4, 5}), KSubset(6, {2, 5, 6})}, 3);
        auto sc = star_complement(f, KSubset(6, {1, 2}));
        CHECK(sc.t == 2);
        REQUIRE(sc.classes.count(1) == 1);
        REQUIRE(sc.classes.count(0) == 1);
        CHECK(sc.classes.at(0) == SetFamily(6, {KSubset(6, {6})}));
        CHECK(sc.classes.at(1) == SetFamily(6, {KSubset(6, {5, 6}), KSubset(6, {3, 4})}));
        for (const auto& [a, cls] : sc.classes)
            for (const auto& s : cls) CHECK(s.size() == 6 - 3 - 2 + a);
        CHECK(sc.total_size() == 3);
        CHECK(star_complement(SetFamily(6, 3), KSubset(6, {1, 2})).total_size() == 0);
    }
}
