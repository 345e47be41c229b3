#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kntw/graph.hpp"
#include "kntw/vertex_set.hpp"

namespace kntw {

/// Bags indexed by tree node 0..num_nodes-1 (1-based ids in .td files) and the
/// edges of the tree connecting them. Construction rejects edge lists that do
/// not form a tree and bags that mention vertices outside the host.
class TreeDecomposition {
public:
    TreeDecomposition(std::size_t host_vertices, std::vector<VertexSet> bags,
                      std::vector<std::pair<int, int>> tree_edges);

    std::size_t host_vertices() const noexcept { return host_vertices_; }
    std::size_t num_nodes() const noexcept { return bags_.size(); }
    const std::vector<VertexSet>& bags() const noexcept { return bags_; }
    const VertexSet& bag(std::size_t node) const { return bags_.at(node); }
    const std::vector<std::pair<int, int>>& tree_edges() const noexcept { return edges_; }
    std::size_t max_bag_size() const noexcept;

private:
    std::size_t host_vertices_;
    std::vector<VertexSet> bags_;
    std::vector<std::pair<int, int>> edges_;
};

/// max bag size - 1 (so -1 for a single empty bag).
long width(const TreeDecomposition& td);

enum class Violation {
    none,
    host_mismatch,       // decomposition built for a different vertex count
    vertex_missing,      // (i): B^{-1}(v) is empty
    vertex_disconnected, // (i): B^{-1}(v) induces a disconnected subtree
    edge_uncovered,      // (ii): no bag holds both endpoints
};

struct Verdict {
    Violation violation = Violation::none;
    int vertex = -1;           // 0-based; set for vertex violations
    std::pair<int, int> edge{-1, -1};  // 0-based; set for edge_uncovered
    std::string message;

    bool valid() const noexcept { return violation == Violation::none; }
};

/// Checks both tree-decomposition conditions against g. Reports the first
/// failure scanning vertices ascending, then edges lexicographically.
Verdict validate(const TreeDecomposition& td, const Graph& g);

/// Center bag V \ s plus one leaf {v} ∪ N(v) per v in s. Throws InvalidInput
/// unless s is independent in g.
TreeDecomposition build_star_decomposition(const Graph& g, const VertexSet& s);

enum class SixBagVariant { J53c, J63c };

struct DecomposedGraph {
    Graph graph;
    TreeDecomposition decomposition;
};

/// The six-bag decomposition of the complement of J(5,3), and the same shape
/// over the complement of J(6,3).
DecomposedGraph build_six_bag_decomposition(SixBagVariant variant);

/// Bag of v = {v} plus its later neighbours in the graph filled in by
/// eliminating vertices in the given order. Each bag hangs off the bag of the
/// first-eliminated vertex among those later neighbours.
TreeDecomposition decomposition_from_elimination_order(const Graph& g,
                                                       const std::vector<int>& order);

/// Width of the elimination order without materialising bags.
long elimination_width(const Graph& g, const std::vector<int>& order);

}  // namespace kntw
