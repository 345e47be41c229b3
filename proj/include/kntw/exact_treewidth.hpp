#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "kntw/graph.hpp"

namespace kntw {

struct Budget {
    std::chrono::milliseconds time_limit{60'000};
    std::size_t memory_bytes = std::size_t{2} << 30;
};

enum class TwStatus { exact, bounds };

struct TwResult {
    long lower = -1;
    long upper = -1;
    /// Elimination order (0-based vertices, first eliminated first) of width `upper`.
    std::optional<std::vector<int>> certificate;
    TwStatus status = TwStatus::bounds;

    bool is_exact() const noexcept { return status == TwStatus::exact; }
};

inline constexpr std::size_t kSubsetDpMaxVertices = 26;
inline constexpr std::size_t kExactMaxVertices = 35;

/// Exact treewidth. Up to 26 vertices runs the subset dynamic program, up to 35
/// a depth-first branch and bound; larger graphs throw ResourceError. When the
/// budget runs out the result carries validated bounds instead.
TwResult exact_tw(const Graph& g, const Budget& budget = {});

/// The two exact engines, callable directly (tests compare them).
TwResult subset_dp_tw(const Graph& g, const Budget& budget = {});
TwResult branch_and_bound_tw(const Graph& g, const Budget& budget = {});

/// Max over subgraphs of the minimum degree.
long degeneracy(const Graph& g);
/// Minor-min-width: contract a minimum-degree vertex into its lowest-degree neighbour.
long minor_min_width(const Graph& g);
/// max(degeneracy, minor_min_width); -1 for the empty graph.
long lower_bound(const Graph& g);

/// Greedy min-fill elimination (min-degree above 1000 vertices, where min-fill
/// scoring is too slow). Ties go to the smallest vertex id.
TwResult upper_bound_heuristic(const Graph& g);

}  // namespace kntw
