#pragma once

// Balanced separators in the normalisation used by the treewidth lower bound:
// X is a p-separator when no component of G - X has more than p·|V(G - X)|
// vertices. Note the threshold scales with |V(G - X)|, not |V(G)|.

#include <cstddef>
#include <optional>
#include <vector>

#include "kntw/arith.hpp"
#include "kntw/graph.hpp"

namespace kntw {

/// Components of G - X split into two sides, each of total size <= p·|V(G - X)|.
struct ComponentBipartition {
    std::vector<std::size_t> side_a;  // indices into SeparatorCheck::components
    std::vector<std::size_t> side_b;
    std::size_t size_a = 0;
    std::size_t size_b = 0;
};

struct SeparatorCheck {
    VertexSet separator;
    Rational p;
    std::vector<VertexSet> components;        // ordered by smallest vertex
    std::vector<std::size_t> component_sizes;  // parallel to components
    bool balanced = false;
    /// Present when such a split of the components exists.
    std::optional<ComponentBipartition> partition;
};

/// Throws InvalidInput unless 2/3 <= p < 1.
void check_separator_ratio(const Rational& p);

SeparatorCheck check_p_separator(const Graph& g, const VertexSet& x, const Rational& p);

inline constexpr std::size_t kSeparatorSearchCap = 16;

struct MinSeparator {
    std::size_t order = 0;
    VertexSet witness;  // first balanced set found in (size, colex-of-mask) order
};

/// Exhaustive search by increasing size; ResourceError above 16 vertices.
MinSeparator min_p_separator(const Graph& g, const Rational& p);
std::size_t min_p_separator_order(const Graph& g, const Rational& p);

}  // namespace kntw
