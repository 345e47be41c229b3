#include "kntw/exact_treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "kntw/errors.hpp"
#include "kntw/tree_decomposition.hpp"

namespace kntw {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.num_vertices(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v)
        g.neighbors(static_cast<int>(v)).for_each([&](std::size_t u) { adj[v] |= bit(static_cast<int>(u)); });
    return adj;
}

// Vertices outside eliminated ∪ {v} reachable from v through eliminated:
// v's neighbourhood once everything in `eliminated` has been eliminated.
Mask later_neighbours(const std::vector<Mask>& adj, Mask eliminated, int v) {
    Mask comp = bit(v);
    Mask frontier = comp;
    Mask seen = 0;
    while (frontier) {
        int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask a = adj[static_cast<std::size_t>(u)];
        seen |= a;
        Mask fresh = a & eliminated & ~comp;
        comp |= fresh;
        frontier |= fresh;
    }
    return seen & ~eliminated & ~bit(v);
}

int q_value(const std::vector<Mask>& adj, Mask eliminated, int v) {
    return std::popcount(later_neighbours(adj, eliminated, v));
}

TwResult bounds_only(const Graph& g) {
    TwResult r = upper_bound_heuristic(g);
    r.lower = std::min(lower_bound(g), r.upper);
    r.status = r.lower == r.upper ? TwStatus::exact : TwStatus::bounds;
    return r;
}

TwResult empty_result() {
    TwResult r;
    r.lower = r.upper = -1;
    r.certificate = std::vector<int>{};
    r.status = TwStatus::exact;
    return r;
}

}  // namespace

TwResult subset_dp_tw(const Graph& g, const Budget& budget) {
    const std::size_t n = g.num_vertices();
    if (n > kSubsetDpMaxVertices)
        throw ResourceError("subset DP is limited to " + std::to_string(kSubsetDpMaxVertices) +
                            " vertices");
    if (n == 0) return empty_result();
    const std::size_t states = std::size_t{1} << n;
    if (states > budget.memory_bytes) return bounds_only(g);

    const auto deadline = Clock::now() + budget.time_limit;
    const std::vector<Mask> adj = adjacency_masks(g);
    // tw[S] = best width of eliminating exactly S first; tw[∅] plays -infinity
    std::vector<std::uint8_t> tw(states, 0);
    for (Mask s = 1; s < states; ++s) {
        if ((s & 0xFFFF) == 0 && Clock::now() > deadline) return bounds_only(g);
        int best = std::numeric_limits<int>::max();
        for (Mask rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            Mask prev = s & ~bit(v);
            int sub = tw[prev];
            if (sub >= best) continue;
            best = std::min(best, std::max(sub, q_value(adj, prev, v)));
        }
        tw[s] = static_cast<std::uint8_t>(best);
    }

    // walk back from V, taking the smallest vertex that attains each optimum
    std::vector<int> order(n);
    Mask s = states - 1;
    for (std::size_t pos = n; pos-- > 0;) {
        for (Mask rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            Mask prev = s & ~bit(v);
            if (std::max<int>(tw[prev], q_value(adj, prev, v)) == tw[s]) {
                order[pos] = v;
                s = prev;
                break;
            }
        }
    }
    TwResult r;
    r.lower = r.upper = tw[states - 1];
    r.certificate = std::move(order);
    r.status = TwStatus::exact;
    return r;
}

namespace {

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, const Budget& budget)
        : n_(static_cast<int>(g.num_vertices())),
          adj_(adjacency_masks(g)),
          deadline_(Clock::now() + budget.time_limit),
          memo_limit_(budget.memory_bytes / 32) {}

    // returns false when the budget ran out
    bool run(long incumbent, std::vector<int> incumbent_order) {
        best_ = incumbent;
        best_order_ = std::move(incumbent_order);
        prefix_.clear();
        return search(0, -1);
    }

    long best() const { return best_; }
    const std::vector<int>& best_order() const { return best_order_; }

private:
    // degeneracy of the graph left after eliminating `eliminated`
    int remaining_degeneracy(Mask eliminated) const {
        Mask alive = full() & ~eliminated;
        std::vector<Mask> rows(static_cast<std::size_t>(n_), 0);
        for (Mask r = alive; r; r &= r - 1) {
            int v = std::countr_zero(r);
            rows[static_cast<std::size_t>(v)] = later_neighbours(adj_, eliminated, v);
        }
        int best = 0;
        while (alive) {
            int min_v = -1, min_d = n_ + 1;
            for (Mask r = alive; r; r &= r - 1) {
                int v = std::countr_zero(r);
                int d = std::popcount(rows[static_cast<std::size_t>(v)] & alive);
                if (d < min_d) min_d = d, min_v = v;
            }
            best = std::max(best, min_d);
            alive &= ~bit(min_v);
        }
        return best;
    }

    Mask full() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

    bool search(Mask eliminated, long cost) {
        if ((++nodes_ & 0x3FF) == 0 && Clock::now() > deadline_) return false;
        const int left = n_ - std::popcount(eliminated);
        // the remaining vertices can always go as one clique-sized bag
        long finish = std::max<long>(cost, left - 1);
        if (finish < best_) {
            best_ = finish;
            best_order_ = prefix_;
            for (Mask r = full() & ~eliminated; r; r &= r - 1) best_order_.push_back(std::countr_zero(r));
        }
        if (left <= 1) return true;
        if (std::max<long>(cost, remaining_degeneracy(eliminated)) >= best_) return true;

        auto it = memo_.find(eliminated);
        if (it != memo_.end()) {
            if (it->second <= cost) return true;
            it->second = cost;
        } else if (memo_.size() < memo_limit_) {
            memo_.emplace(eliminated, cost);
        }

        std::vector<std::pair<int, int>> children;
        for (Mask r = full() & ~eliminated; r; r &= r - 1) {
            int v = std::countr_zero(r);
            children.emplace_back(q_value(adj_, eliminated, v), v);
        }
        std::sort(children.begin(), children.end());
        for (auto [q, v] : children) {
            long next = std::max<long>(cost, q);
            if (next >= best_) break;
            prefix_.push_back(v);
            bool ok = search(eliminated | bit(v), next);
            prefix_.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    int n_;
    std::vector<Mask> adj_;
    Clock::time_point deadline_;
    std::size_t memo_limit_;
    std::unordered_map<Mask, long> memo_;
    std::vector<int> prefix_;
    long best_ = 0;
    std::vector<int> best_order_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

TwResult branch_and_bound_tw(const Graph& g, const Budget& budget) {
    if (g.num_vertices() > 64)
        throw ResourceError("branch and bound is limited to 64 vertices");
    if (g.num_vertices() == 0) return empty_result();
    TwResult heuristic = upper_bound_heuristic(g);
    const long lower = lower_bound(g);
    if (lower >= heuristic.upper) {
        heuristic.lower = heuristic.upper;
        heuristic.status = TwStatus::exact;
        return heuristic;
    }
    BranchAndBound search(g, budget);
    bool complete = search.run(heuristic.upper, *heuristic.certificate);
    TwResult r;
    r.upper = search.best();
    r.certificate = search.best_order();
    r.lower = complete ? r.upper : std::min(lower, r.upper);
    r.status = r.lower == r.upper ? TwStatus::exact : TwStatus::bounds;
    return r;
}

TwResult exact_tw(const Graph& g, const Budget& budget) {
    const std::size_t n = g.num_vertices();
    if (n > kExactMaxVertices)
        throw ResourceError("exact treewidth is limited to " + std::to_string(kExactMaxVertices) +
                            " vertices, graph has " + std::to_string(n));
    if (n <= kSubsetDpMaxVertices) return subset_dp_tw(g, budget);
    return branch_and_bound_tw(g, budget);
}

long degeneracy(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return -1;
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<int>(v));
    std::vector<bool> alive(n, true);
    long best = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t min_v = n;
        for (std::size_t v = 0; v < n; ++v)
            if (alive[v] && (min_v == n || deg[v] < deg[min_v])) min_v = v;
        best = std::max(best, static_cast<long>(deg[min_v]));
        alive[min_v] = false;
        g.neighbors(static_cast<int>(min_v)).for_each([&](std::size_t u) {
            if (alive[u]) --deg[u];
        });
    }
    return best;
}

long minor_min_width(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return -1;
    std::vector<VertexSet> rows;
    rows.reserve(n);
    for (std::size_t v = 0; v < n; ++v) rows.push_back(g.neighbors(static_cast<int>(v)));
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = rows[v].count();
    std::vector<bool> alive(n, true);
    long best = 0;
    for (std::size_t left = n; left > 1; --left) {
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u)
            if (alive[u] && (v == n || deg[u] < deg[v])) v = u;
        best = std::max(best, static_cast<long>(deg[v]));
        alive[v] = false;
        if (deg[v] == 0) continue;
        std::size_t target = n;
        rows[v].for_each([&](std::size_t u) {
            if (target == n || deg[u] < deg[target]) target = u;
        });
        // contract v into target
        rows[v].for_each([&](std::size_t u) {
            rows[u].erase(v);
            --deg[u];
        });
        VertexSet gained = rows[v] - rows[target];
        gained.erase(target);
        gained.for_each([&](std::size_t u) {
            rows[u].insert(target);
            ++deg[u];
        });
        rows[target] |= gained;
        deg[target] += gained.count();
        rows[v] = VertexSet(n);
        deg[v] = 0;
    }
    return best;
}

long lower_bound(const Graph& g) { return std::max(degeneracy(g), minor_min_width(g)); }

TwResult upper_bound_heuristic(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return empty_result();
    const bool use_fill = n <= 1000;
    std::vector<VertexSet> rows;
    rows.reserve(n);
    for (std::size_t v = 0; v < n; ++v) rows.push_back(g.neighbors(static_cast<int>(v)));
    std::vector<bool> alive(n, true);
    std::vector<int> order;
    order.reserve(n);
    long w = -1;

    auto fill = [&](std::size_t v) {
        std::size_t d = rows[v].count();
        std::size_t present = 0;  // ordered adjacent pairs among neighbours
        rows[v].for_each([&](std::size_t u) { present += rows[u].intersection_count(rows[v]); });
        return (d * (d - 1) - present) / 2;
    };

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        std::size_t pick_score = std::numeric_limits<std::size_t>::max();
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            std::size_t score = use_fill ? fill(v) : rows[v].count();
            if (score < pick_score) pick = v, pick_score = score;
        }
        const VertexSet nb = rows[pick];
        w = std::max(w, static_cast<long>(nb.count()));
        nb.for_each([&](std::size_t u) {
            rows[u] |= nb;
            rows[u].erase(u);
            rows[u].erase(pick);
        });
        alive[pick] = false;
        rows[pick] = VertexSet(n);
        order.push_back(static_cast<int>(pick));
    }
    TwResult r;
    r.upper = w;
    r.lower = std::min(lower_bound(g), w);
    r.certificate = std::move(order);
    r.status = r.lower == r.upper ? TwStatus::exact : TwStatus::bounds;
    return r;
}

}  // namespace kntw
