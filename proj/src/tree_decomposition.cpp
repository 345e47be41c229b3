#include "kntw/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "kntw/errors.hpp"

namespace kntw {

namespace {

std::string id(int v) { return std::to_string(v + 1); }

}  // namespace

TreeDecomposition::TreeDecomposition(std::size_t host_vertices, std::vector<VertexSet> bags,
                                     std::vector<std::pair<int, int>> tree_edges)
    : host_vertices_(host_vertices), bags_(std::move(bags)), edges_(std::move(tree_edges)) {
    const std::size_t nodes = bags_.size();
    if (nodes == 0) throw InvalidInput("a tree decomposition needs at least one node");
    for (std::size_t i = 0; i < nodes; ++i) {
        if (bags_[i].universe() != host_vertices)
            throw InvalidInput("bag " + std::to_string(i + 1) + " is over a different vertex set");
    }
    if (edges_.size() != nodes - 1)
        throw InvalidInput("tree on " + std::to_string(nodes) + " nodes needs " +
                           std::to_string(nodes - 1) + " edges, got " +
                           std::to_string(edges_.size()));
    // union-find: n-1 edges and no cycle means a spanning tree
    std::vector<std::size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges_) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nodes ||
            static_cast<std::size_t>(b) >= nodes)
            throw InvalidInput("tree edge {" + id(a) + "," + id(b) + "} references a missing node");
        auto ra = find(static_cast<std::size_t>(a));
        auto rb = find(static_cast<std::size_t>(b));
        if (ra == rb) throw InvalidInput("tree edges contain a cycle through node " + id(a));
        parent[ra] = rb;
    }
}

std::size_t TreeDecomposition::max_bag_size() const noexcept {
    std::size_t m = 0;
    for (const auto& b : bags_) m = std::max(m, b.count());
    return m;
}

long width(const TreeDecomposition& td) { return static_cast<long>(td.max_bag_size()) - 1; }

Verdict validate(const TreeDecomposition& td, const Graph& g) {
    Verdict verdict;
    const std::size_t n = g.num_vertices();
    if (td.host_vertices() != n) {
        verdict.violation = Violation::host_mismatch;
        verdict.message = "decomposition is over " + std::to_string(td.host_vertices()) +
                          " vertices, graph has " + std::to_string(n);
        return verdict;
    }
    const std::size_t nodes = td.num_nodes();
    std::vector<std::vector<int>> tree(nodes);
    for (auto [a, b] : td.tree_edges()) {
        tree[static_cast<std::size_t>(a)].push_back(b);
        tree[static_cast<std::size_t>(b)].push_back(a);
    }
    // occurrence[v] = nodes whose bag holds v
    std::vector<VertexSet> occurrence(n, VertexSet(nodes));
    for (std::size_t t = 0; t < nodes; ++t)
        td.bag(t).for_each([&](std::size_t v) { occurrence[v].insert(t); });

    for (std::size_t v = 0; v < n; ++v) {
        const VertexSet& occ = occurrence[v];
        if (occ.empty()) {
            verdict.violation = Violation::vertex_missing;
            verdict.vertex = static_cast<int>(v);
            verdict.message = "(i) vertex " + id(static_cast<int>(v)) + " is in no bag";
            return verdict;
        }
        // flood the tree restricted to occ
        VertexSet reached(nodes);
        std::vector<std::size_t> stack{occ.first()};
        reached.insert(stack.back());
        while (!stack.empty()) {
            std::size_t t = stack.back();
            stack.pop_back();
            for (int u : tree[t]) {
                auto uu = static_cast<std::size_t>(u);
                if (occ.contains(uu) && !reached.contains(uu)) {
                    reached.insert(uu);
                    stack.push_back(uu);
                }
            }
        }
        if (!(reached == occ)) {
            verdict.violation = Violation::vertex_disconnected;
            verdict.vertex = static_cast<int>(v);
            verdict.message = "(i) bags containing vertex " + id(static_cast<int>(v)) +
                              " do not form a connected subtree";
            return verdict;
        }
    }
    for (auto [u, w] : g.edges()) {
        if (!occurrence[static_cast<std::size_t>(u)].intersects(
                occurrence[static_cast<std::size_t>(w)])) {
            verdict.violation = Violation::edge_uncovered;
            verdict.edge = {u, w};
            verdict.message = "(ii) edge {" + id(u) + "," + id(w) + "} is in no bag";
            return verdict;
        }
    }
    return verdict;
}

TreeDecomposition build_star_decomposition(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.num_vertices();
    if (s.universe() != n) throw InvalidInput("independent set is over a different vertex set");
    if (!g.is_independent(s)) throw InvalidInput("star decomposition needs an independent set");
    std::vector<VertexSet> bags;
    bags.push_back(VertexSet::full(n) - s);
    std::vector<std::pair<int, int>> edges;
    s.for_each([&](std::size_t v) {
        VertexSet leaf = g.neighbors(static_cast<int>(v));
        leaf.insert(v);
        bags.push_back(std::move(leaf));
        edges.emplace_back(0, static_cast<int>(bags.size()) - 1);
    });
    return TreeDecomposition(n, std::move(bags), std::move(edges));
}

DecomposedGraph build_six_bag_decomposition(SixBagVariant variant) {
    const int n = variant == SixBagVariant::J53c ? 5 : 6;
    Graph g = build_johnson_complement(n, 3);
    auto v = [&](std::initializer_list<int> elems) {
        return static_cast<std::size_t>(g.vertex_of(KSubset(n, elems)) - 1);
    };

    // both variants drop the same five vertices from X
    VertexSet x = VertexSet::full(g.num_vertices());
    for (auto s : {v({1, 2, 3}), v({1, 2, 4}), v({1, 2, 5}), v({1, 3, 5}), v({1, 4, 5})}) x.erase(s);

    auto swap_bag = [&](std::initializer_list<std::size_t> add,
                        std::initializer_list<std::size_t> drop) {
        VertexSet b = x;
        for (auto d : drop) b.erase(d);
        for (auto a : add) b.insert(a);
        return b;
    };
    const auto s134 = v({1, 3, 4}), s245 = v({2, 4, 5}), s235 = v({2, 3, 5});
    std::vector<VertexSet> bags{
        swap_bag({v({1, 2, 5})}, {s245}),                  // 1: root
        x,                                                 // 2: X
        swap_bag({v({1, 2, 3})}, {s134}),                  // 3
        swap_bag({v({1, 2, 3}), v({1, 4, 5})}, {s134, s245}),  // 4: leaf under 3
        swap_bag({v({1, 2, 4})}, {s134}),                  // 5
        swap_bag({v({1, 2, 4}), v({1, 3, 5})}, {s134, s235}),  // 6: leaf under 5
    };
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}};
    TreeDecomposition td(g.num_vertices(), std::move(bags), std::move(edges));
    return {std::move(g), std::move(td)};
}

namespace {

void check_permutation(const Graph& g, const std::vector<int>& order) {
    const std::size_t n = g.num_vertices();
    if (order.size() != n)
        throw InvalidInput("elimination order has " + std::to_string(order.size()) +
                           " entries for " + std::to_string(n) + " vertices");
    VertexSet seen(n);
    for (int v : order) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen.contains(static_cast<std::size_t>(v)))
            throw InvalidInput("elimination order is not a permutation of the vertices");
        seen.insert(static_cast<std::size_t>(v));
    }
}

// Later-neighbourhood of each vertex in the filled graph.
std::vector<VertexSet> fill_in(const Graph& g, const std::vector<int>& order) {
    const std::size_t n = g.num_vertices();
    std::vector<VertexSet> adj;
    adj.reserve(n);
    for (std::size_t v = 0; v < n; ++v) adj.push_back(g.neighbors(static_cast<int>(v)));
    std::vector<VertexSet> later(n, VertexSet(n));
    VertexSet remaining = VertexSet::full(n);
    for (int v : order) {
        auto vv = static_cast<std::size_t>(v);
        remaining.erase(vv);
        VertexSet nb = adj[vv] & remaining;
        later[vv] = nb;
        nb.for_each([&](std::size_t u) {
            adj[u] |= nb;
            adj[u].erase(u);
        });
    }
    return later;
}

}  // namespace

TreeDecomposition decomposition_from_elimination_order(const Graph& g,
                                                       const std::vector<int>& order) {
    check_permutation(g, order);
    const std::size_t n = g.num_vertices();
    if (n == 0) return TreeDecomposition(0, {VertexSet(0)}, {});
    std::vector<VertexSet> later = fill_in(g, order);
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[static_cast<std::size_t>(order[i])] = i;

    // node i holds the bag of order[i]
    std::vector<VertexSet> bags;
    bags.reserve(n);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        auto v = static_cast<std::size_t>(order[i]);
        VertexSet bag = later[v];
        bag.insert(v);
        bags.push_back(std::move(bag));
        if (i + 1 == n) continue;
        std::size_t parent = n;
        later[v].for_each([&](std::size_t u) { parent = std::min(parent, position[u]); });
        // components finished early attach to the next node to keep one tree
        if (parent == n) parent = i + 1;
        edges.emplace_back(static_cast<int>(i), static_cast<int>(parent));
    }
    return TreeDecomposition(n, std::move(bags), std::move(edges));
}

long elimination_width(const Graph& g, const std::vector<int>& order) {
    check_permutation(g, order);
    long w = -1;
    for (const auto& nb : fill_in(g, order)) w = std::max(w, static_cast<long>(nb.count()));
    return w;
}

}  // namespace kntw
