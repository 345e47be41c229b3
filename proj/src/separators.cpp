#include "kntw/separators.hpp"

#include <bit>
#include <cstdint>

#include "kntw/errors.hpp"

namespace kntw {

void check_separator_ratio(const Rational& p) {
    if (p < Rational(2, 3) || p >= 1)
        throw InvalidInput("separator ratio p = " + to_string(p) + " outside [2/3, 1)");
}

namespace {

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& x) {
    const std::size_t n = g.num_vertices();
    VertexSet unvisited = VertexSet::full(n) - x;
    std::vector<VertexSet> out;
    for (std::size_t root = unvisited.first(); root < n; root = unvisited.first()) {
        VertexSet comp(n);
        comp.insert(root);
        unvisited.erase(root);
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            VertexSet fresh = g.neighbors(static_cast<int>(v)) & unvisited;
            fresh.for_each([&](std::size_t u) {
                comp.insert(u);
                unvisited.erase(u);
                stack.push_back(u);
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

// size <= p * total, exactly
bool within(std::size_t size, const Rational& p, std::size_t total) {
    return Rational(size) <= p * Rational(total);
}

std::optional<ComponentBipartition> bipartition(const std::vector<std::size_t>& sizes,
                                                const Rational& p, std::size_t total) {
    // reach[s] = index of the component that first reached subset sum s (+1), 0 = unreached
    std::vector<std::size_t> reach(total + 1, 0);
    std::vector<std::size_t> from(total + 1, 0);
    std::vector<bool> reachable(total + 1, false);
    reachable[0] = true;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        // descending so each component is used at most once
        for (std::size_t s = total + 1; s-- > sizes[i];) {
            std::size_t prev = s - sizes[i];
            if (!reachable[s] && reachable[prev]) {
                reachable[s] = true;
                reach[s] = i + 1;
                from[s] = prev;
            }
        }
    }
    for (std::size_t s = 0; s <= total; ++s) {
        if (!reachable[s] || !within(s, p, total) || !within(total - s, p, total)) continue;
        ComponentBipartition part;
        std::vector<bool> in_a(sizes.size(), false);
        for (std::size_t cur = s; cur != 0; cur = from[cur]) in_a[reach[cur] - 1] = true;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (in_a[i]) {
                part.side_a.push_back(i);
                part.size_a += sizes[i];
            } else {
                part.side_b.push_back(i);
                part.size_b += sizes[i];
            }
        }
        return part;
    }
    return std::nullopt;
}

}  // namespace

SeparatorCheck check_p_separator(const Graph& g, const VertexSet& x, const Rational& p) {
    check_separator_ratio(p);
    if (x.universe() != g.num_vertices()) throw InvalidInput("separator is over a different vertex set");
    SeparatorCheck check;
    check.separator = x;
    check.p = p;
    check.components = components_without(g, x);
    std::size_t remaining = 0;
    for (const auto& c : check.components) {
        check.component_sizes.push_back(c.count());
        remaining += check.component_sizes.back();
    }
    check.balanced = true;
    for (std::size_t s : check.component_sizes)
        if (!within(s, p, remaining)) check.balanced = false;
    check.partition = bipartition(check.component_sizes, p, remaining);
    return check;
}

MinSeparator min_p_separator(const Graph& g, const Rational& p) {
    check_separator_ratio(p);
    const std::size_t n = g.num_vertices();
    if (n > kSeparatorSearchCap)
        throw ResourceError("separator search is capped at " + std::to_string(kSeparatorSearchCap) +
                            " vertices, graph has " + std::to_string(n));
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::size_t size = 0; size <= n; ++size) {
        // Gosper's hack over masks of popcount `size`
        std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
        while (mask < limit) {
            VertexSet x(n);
            for (std::uint64_t m = mask; m; m &= m - 1) x.insert(static_cast<std::size_t>(std::countr_zero(m)));
            if (check_p_separator(g, x, p).balanced) return {size, x};
            if (mask == 0) break;
            std::uint64_t c = mask & -mask;
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    // X = V(G) is always balanced, so the loop returns for n >= 0
    return {n, VertexSet::full(n)};
}

std::size_t min_p_separator_order(const Graph& g, const Rational& p) {
    return min_p_separator(g, p).order;
}

}  // namespace kntw
