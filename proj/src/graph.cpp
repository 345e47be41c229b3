#include "kntw/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "kntw/errors.hpp"

namespace kntw {

std::string FamilyTag::describe() const {
    switch (kind) {
        case FamilyKind::generalized_kneser:
            return "gkneser " + std::to_string(n) + " " + std::to_string(k) + " " + std::to_string(t);
        case FamilyKind::johnson:
            return "johnson " + std::to_string(n) + " " + std::to_string(k);
        case FamilyKind::johnson_complement:
            return "johnson-complement " + std::to_string(n) + " " + std::to_string(k);
        case FamilyKind::generic:
            break;
    }
    return "generic";
}

FamilyTag FamilyTag::parse(const std::string& text) {
    std::istringstream in(text);
    std::string name;
    in >> name;
    FamilyTag tag;
    auto read_params = [&](int count) {
        int* slots[] = {&tag.n, &tag.k, &tag.t};
        for (int i = 0; i < count; ++i)
            if (!(in >> *slots[i])) throw InvalidInput("family tag '" + text + "' lacks parameters");
        std::string extra;
        if (in >> extra) throw InvalidInput("trailing text in family tag '" + text + "'");
    };
    if (name == "gkneser") {
        tag.kind = FamilyKind::generalized_kneser;
        read_params(3);
        (void)ParamTriple(tag.n, tag.k, tag.t);
    } else if (name == "johnson") {
        tag.kind = FamilyKind::johnson;
        read_params(2);
    } else if (name == "johnson-complement") {
        tag.kind = FamilyKind::johnson_complement;
        read_params(2);
    } else if (name == "generic") {
        read_params(0);
    } else {
        throw InvalidInput("unknown graph family '" + name + "'");
    }
    if (tag.kind != FamilyKind::generic && (tag.k < 1 || tag.k > tag.n))
        throw InvalidInput("family tag '" + text + "' needs 1 <= k <= n");
    return tag;
}

ParamTriple::ParamTriple(int n_, int k_, int t_) : n(n_), k(k_), t(t_) {
    if (!(1 <= t && t < k && k <= n))
        throw InvalidInput("need 1 <= t < k <= n, got (n,k,t) = (" + std::to_string(n) + "," +
                           std::to_string(k) + "," + std::to_string(t) + ")");
}

Graph::Graph(std::size_t num_vertices) : rows_(num_vertices, VertexSet(num_vertices)) {}

Graph Graph::from_edges(std::size_t num_vertices, const std::vector<std::pair<int, int>>& edges) {
    Graph g(num_vertices);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    const auto n = static_cast<int>(rows_.size());
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidInput("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                           "} references a vertex outside 1.." + std::to_string(n));
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u + 1));
    if (adjacent(u, v)) return;
    rows_[static_cast<std::size_t>(u)].insert(static_cast<std::size_t>(v));
    rows_[static_cast<std::size_t>(v)].insert(static_cast<std::size_t>(u));
    ++num_edges_;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& row : rows_) d = std::max(d, row.count());
    return d;
}

std::size_t Graph::min_degree() const noexcept {
    if (rows_.empty()) return 0;
    std::size_t d = rows_.size();
    for (const auto& row : rows_) d = std::min(d, row.count());
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges_);
    for (std::size_t u = 0; u < rows_.size(); ++u) {
        for (std::size_t v = rows_[u].next(u + 1); v < rows_.size(); v = rows_[u].next(v + 1))
            out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return out;
}

bool Graph::is_independent(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](std::size_t v) {
        if (ok && rows_[v].intersects(s)) ok = false;
    });
    return ok;
}

Graph Graph::without(const VertexSet& removed) const {
    std::vector<int> new_index(rows_.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < rows_.size(); ++v)
        if (!removed.contains(v)) new_index[v] = next++;
    Graph h(static_cast<std::size_t>(next));
    for (auto [u, v] : edges()) {
        int a = new_index[static_cast<std::size_t>(u)];
        int b = new_index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) h.add_edge(a, b);
    }
    return h;
}

void Graph::set_labels(std::vector<KSubset> labels) {
    if (labels.size() != rows_.size()) throw InvalidInput("label count differs from vertex count");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (colex_rank(labels[i]) != i + 1 ||
            (i > 0 && (labels[i].size() != labels[0].size() ||
                       labels[i].ground_size() != labels[0].ground_size())))
            throw InvalidInput("label of vertex " + std::to_string(i + 1) + " is " +
                               labels[i].to_string() + ", not the subset of that colex rank");
    }
    labels_ = std::move(labels);
}

int Graph::vertex_of(const KSubset& s) const {
    if (!labels_) throw InvalidInput("graph has no subset labels");
    auto rank = colex_rank(s);
    if (rank > labels_->size() || !((*labels_)[rank - 1] == s))
        throw InvalidInput("no vertex labelled " + s.to_string());
    return static_cast<int>(rank);
}

namespace {

void check_cap(int n, int k, const GraphLimits& limits) {
    if (k < 0 || k > n) throw InvalidInput("need 0 <= k <= n");
    if (binomial(n, k) > BigInt(limits.max_vertices))
        throw ResourceError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                            binomial(n, k).str() + " vertices exceeds the explicit-graph cap of " +
                            std::to_string(limits.max_vertices));
}

// Vertices are the k-subsets of [n] in colex order; u ~ v iff pred(|A ∩ B|).
template <typename Pred>
Graph build_intersection_graph(int n, int k, Pred pred) {
    SetFamily vertices = all_subsets(n, k);
    auto members = vertices.members();
    Graph g(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (pred(members[i].intersection_size(members[j])))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    g.set_labels({members.begin(), members.end()});
    return g;
}

}  // namespace

Graph build_generalized_kneser(const ParamTriple& p, GraphLimits limits) {
    check_cap(p.n, p.k, limits);
    Graph g = build_intersection_graph(p.n, p.k, [t = p.t](int common) { return common < t; });
    g.set_family({FamilyKind::generalized_kneser, p.n, p.k, p.t});
    return g;
}

Graph build_johnson(int n, int k, GraphLimits limits) {
    if (k < 1) throw InvalidInput("Johnson graph needs k >= 1");
    check_cap(n, k, limits);
    Graph g = build_intersection_graph(n, k, [k](int common) { return common == k - 1; });
    g.set_family({FamilyKind::johnson, n, k, 0});
    return g;
}

Graph build_johnson_complement(int n, int k, GraphLimits limits) {
    if (k < 1) throw InvalidInput("Johnson graph needs k >= 1");
    check_cap(n, k, limits);
    Graph g = build_intersection_graph(n, k, [k](int common) { return common <= k - 2; });
    g.set_family({FamilyKind::johnson_complement, n, k, 0});
    return g;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.num_vertices();
    Graph h(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!g.adjacent(static_cast<int>(u), static_cast<int>(v)))
                h.add_edge(static_cast<int>(u), static_cast<int>(v));
    if (g.labels()) h.set_labels(*g.labels());
    FamilyTag tag = g.family();
    switch (tag.kind) {
        case FamilyKind::johnson:
            tag.kind = FamilyKind::johnson_complement;
            break;
        case FamilyKind::johnson_complement:
            tag.kind = FamilyKind::johnson;
            break;
        case FamilyKind::generalized_kneser:
            tag = tag.t == tag.k - 1 ? FamilyTag{FamilyKind::johnson, tag.n, tag.k, 0} : FamilyTag{};
            break;
        case FamilyKind::generic:
            break;
    }
    h.set_family(tag);
    return h;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

Graph edgeless_graph(std::size_t n) { return Graph(n); }

BigInt degree_formula(const ParamTriple& p) {
    BigInt total = 0;
    for (int i = 0; i < p.t; ++i) total += binomial(p.k, i) * binomial(p.n - p.k, p.k - i);
    return total;
}

EkrBound ekr_independence_number(const ParamTriple& p) {
    return {binomial(p.n - p.t, p.k - p.t), p.n >= (p.t + 1) * (p.k - p.t + 1)};
}

VertexSet ekr_star_family(const Graph& kneser) {
    const FamilyTag& tag = kneser.family();
    if (tag.kind != FamilyKind::generalized_kneser || !kneser.labels())
        throw InvalidInput("ekr_star_family needs a labelled generalized Kneser graph");
    std::vector<int> core(static_cast<std::size_t>(tag.t));
    std::iota(core.begin(), core.end(), 1);
    KSubset fixed = KSubset::from_elements(tag.n, core);
    VertexSet s(kneser.num_vertices());
    const auto& labels = *kneser.labels();
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (fixed.is_subset_of(labels[v])) s.insert(v);
    return s;
}

namespace {

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const Graph& g) : adj_(g.num_vertices(), 0) {
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            g.neighbors(static_cast<int>(v)).for_each([&](std::size_t u) { adj_[v] |= bit(u); });
    }

    std::uint64_t solve() {
        std::uint64_t all = adj_.size() == 64 ? ~0ULL : (bit(adj_.size()) - 1);
        search(all, 0, 0);
        return best_set_;
    }

private:
    static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

    void search(std::uint64_t cand, std::uint64_t chosen, int size) {
        if (cand == 0) {
            if (size > best_) {
                best_ = size;
                best_set_ = chosen;
            }
            return;
        }
        if (size + std::popcount(cand) <= best_) return;

        int min_v = -1, max_v = -1, min_d = 65, max_d = -1;
        for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int d = std::popcount(adj_[static_cast<std::size_t>(v)] & cand);
            if (d < min_d) min_d = d, min_v = v;
            if (d > max_d) max_d = d, max_v = v;
        }
        // a vertex of degree <= 1 lies in some maximum independent set
        if (min_d <= 1) {
            auto v = static_cast<std::size_t>(min_v);
            search(cand & ~adj_[v] & ~bit(v), chosen | bit(v), size + 1);
            return;
        }
        auto v = static_cast<std::size_t>(max_v);
        search(cand & ~adj_[v] & ~bit(v), chosen | bit(v), size + 1);
        search(cand & ~bit(v), chosen, size);
    }

    std::vector<std::uint64_t> adj_;
    int best_ = -1;
    std::uint64_t best_set_ = 0;
};

}  // namespace

VertexSet maximum_independent_set(const Graph& g) {
    if (g.num_vertices() > kIndependenceCap)
        throw ResourceError("maximum independent set search is capped at " +
                            std::to_string(kIndependenceCap) + " vertices, graph has " +
                            std::to_string(g.num_vertices()));
    std::uint64_t mask = IndependentSetSearch(g).solve();
    VertexSet s(g.num_vertices());
    for (; mask; mask &= mask - 1) s.insert(static_cast<std::size_t>(std::countr_zero(mask)));
    return s;
}

std::size_t brute_force_independence(const Graph& g) { return maximum_independent_set(g).count(); }

namespace {

class IsoSearch {
public:
    IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b), map_(a.num_vertices(), -1) {
        // map vertices of a in BFS order so each new vertex has mapped neighbours
        const std::size_t n = a.num_vertices();
        VertexSet seen(n);
        for (std::size_t root = 0; root < n; ++root) {
            if (seen.contains(root)) continue;
            seen.insert(root);
            std::size_t head = order_.size();
            order_.push_back(static_cast<int>(root));
            while (head < order_.size()) {
                int v = order_[head++];
                a.neighbors(v).for_each([&](std::size_t u) {
                    if (!seen.contains(u)) {
                        seen.insert(u);
                        order_.push_back(static_cast<int>(u));
                    }
                });
            }
        }
    }

    bool run() { return extend(0, VertexSet(b_.num_vertices())); }

private:
    bool extend(std::size_t depth, VertexSet used) {
        if (depth == order_.size()) return true;
        int v = order_[depth];
        for (std::size_t w = 0; w < b_.num_vertices(); ++w) {
            if (used.contains(w) || a_.degree(v) != b_.degree(static_cast<int>(w))) continue;
            bool consistent = true;
            for (std::size_t d = 0; d < depth && consistent; ++d) {
                int x = order_[d];
                consistent = a_.adjacent(v, x) == b_.adjacent(static_cast<int>(w),
                                                              map_[static_cast<std::size_t>(x)]);
            }
            if (!consistent) continue;
            map_[static_cast<std::size_t>(v)] = static_cast<int>(w);
            VertexSet next = used;
            next.insert(w);
            if (extend(depth + 1, next)) return true;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<int> map_;
    std::vector<int> order_;
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() > 20 || b.num_vertices() > 20)
        throw ResourceError("isomorphism test is limited to 20 vertices");
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<std::size_t> da, db;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        da.push_back(a.degree(static_cast<int>(v)));
        db.push_back(b.degree(static_cast<int>(v)));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return IsoSearch(a, b).run();
}

}  // namespace kntw
