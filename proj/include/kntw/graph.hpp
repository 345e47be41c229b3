#pragma once

// Simple undirected graphs on vertex indices 0..n-1. In files and reports a
// vertex appears as its 1-based id (index + 1); for labelled graphs that id is
// the colex rank of the vertex's subset.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kntw/arith.hpp"
#include "kntw/subsets.hpp"
#include "kntw/vertex_set.hpp"

namespace kntw {

enum class FamilyKind { generic, generalized_kneser, johnson, johnson_complement };

/// Which construction produced a graph, with its parameters.
struct FamilyTag {
    FamilyKind kind = FamilyKind::generic;
    int n = 0;
    int k = 0;
    int t = 0;  // only meaningful for generalized_kneser

    /// "gkneser 5 2 1", "johnson 6 3", "johnson-complement 6 3" or "generic".
    std::string describe() const;
    /// Inverse of describe(); throws InvalidInput.
    static FamilyTag parse(const std::string& text);

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Parameters of K(n, k, t); construction enforces 1 <= t < k <= n.
struct ParamTriple {
    int n;
    int k;
    int t;

    ParamTriple(int n, int k, int t);
};

class Graph {
public:
    explicit Graph(std::size_t num_vertices = 0);

    static Graph from_edges(std::size_t num_vertices,
                            const std::vector<std::pair<int, int>>& edges);

    std::size_t num_vertices() const noexcept { return rows_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    /// Adds {u, v}; loops and out-of-range indices throw InvalidInput.
    /// Re-adding an existing edge is a no-op.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const noexcept {
        return rows_[static_cast<std::size_t>(u)].contains(static_cast<std::size_t>(v));
    }
    const VertexSet& neighbors(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
    std::size_t degree(int v) const noexcept { return neighbors(v).count(); }
    std::size_t max_degree() const noexcept;
    std::size_t min_degree() const noexcept;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool is_independent(const VertexSet& s) const;

    /// Subgraph induced by the complement of `removed`, reindexed in order.
    /// Labels and family tag are dropped.
    Graph without(const VertexSet& removed) const;

    const FamilyTag& family() const noexcept { return family_; }
    void set_family(FamilyTag tag) { family_ = tag; }

    const std::optional<std::vector<KSubset>>& labels() const noexcept { return labels_; }
    /// Labels must be distinct, of equal size, and vertex i's label must have colex rank i+1.
    void set_labels(std::vector<KSubset> labels);
    /// 1-based id of the vertex labelled s. Requires labels.
    int vertex_of(const KSubset& s) const;

    /// Same vertex count and edge set; tags and labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.rows_ == b.rows_;
    }

private:
    std::vector<VertexSet> rows_;
    std::size_t num_edges_ = 0;
    FamilyTag family_;
    std::optional<std::vector<KSubset>> labels_;
};

struct GraphLimits {
    std::size_t max_vertices = 5000;
};

/// K(n,k,t): k-subsets of [n] in colex order, adjacent iff |A ∩ B| < t.
Graph build_generalized_kneser(const ParamTriple& p, GraphLimits limits = {});

/// J(n,k): adjacent iff |A ∩ B| = k - 1.
Graph build_johnson(int n, int k, GraphLimits limits = {});

/// Complement of J(n,k): adjacent iff |A ∩ B| <= k - 2.
Graph build_johnson_complement(int n, int k, GraphLimits limits = {});

/// Same labelled vertex set, complementary edge set. Family tag becomes generic
/// except that Johnson and Johnson-complement tags swap.
Graph complement(const Graph& g);

Graph complete_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);

/// Sum_{i=0}^{t-1} C(k,i) C(n-k,k-i), the common degree of K(n,k,t).
BigInt degree_formula(const ParamTriple& p);

struct EkrBound {
    BigInt value;     // C(n-t, k-t)
    bool applicable;  // n >= (t+1)(k-t+1)
};

EkrBound ekr_independence_number(const ParamTriple& p);

/// The sets through {1, ..., t}: a maximum t-intersecting family when the EKR
/// bound applies. Requires a labelled K(n,k,t).
VertexSet ekr_star_family(const Graph& kneser);

inline constexpr std::size_t kIndependenceCap = 40;

/// A maximum independent set by branch and bound. ResourceError above 40 vertices.
VertexSet maximum_independent_set(const Graph& g);
std::size_t brute_force_independence(const Graph& g);

/// Exact isomorphism test by backtracking with degree refinement; intended for
/// fixtures of at most 20 vertices (ResourceError above).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace kntw
