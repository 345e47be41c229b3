// kntw: generate Kneser-type graphs, compute and certify treewidth, and run the
// verification sweeps. Exit codes: 0 ok, 1 invalid input, 2 negative verdict,
// 3 resource or budget limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kntw/errors.hpp"
#include "kntw/exact_treewidth.hpp"
#include "kntw/pace_io.hpp"
#include "kntw/separators.hpp"
#include "kntw/subsets.hpp"
#include "kntw/theorems.hpp"
#include "kntw/tree_decomposition.hpp"

using namespace kntw;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { ok = 0, invalid_input = 1, negative = 2, resource = 3 };

// BigInts go into JSON as numbers when they fit, strings otherwise.
json big(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file(path, text);
}

void print_json(const json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

Graph load_graph(const std::string& path) { return read_gr(read_file(path)).graph; }

double millis_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Budget make_budget(double seconds) {
    Budget b;
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
    return b;
}

// 1-based comma or space separated vertex ids.
VertexSet parse_vertex_list(const std::string& text, std::size_t n) {
    VertexSet s(n);
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream in(normalized);
    std::string token;
    while (in >> token) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(token, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != token.size()) throw InvalidInput("bad vertex id '" + token + "'");
        if (v < 1 || static_cast<std::size_t>(v) > n)
            throw InvalidInput("vertex id " + token + " outside 1.." + std::to_string(n));
        s.insert(static_cast<std::size_t>(v - 1));
    }
    return s;
}

json vertex_list(const VertexSet& s) {
    json out = json::array();
    s.for_each([&](std::size_t v) { out.push_back(v + 1); });
    return out;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::string out;
    std::size_t max_vertices = GraphLimits{}.max_vertices;
};

int cmd_gen(const GenArgs& a) {
    auto need = [&](std::size_t count) {
        if (a.params.size() != count)
            throw InvalidInput(a.family + " takes " + std::to_string(count) + " parameters, got " +
                               std::to_string(a.params.size()));
    };
    GraphLimits limits{a.max_vertices};
    Graph g;
    if (a.family == "gkneser") {
        need(3);
        g = build_generalized_kneser({a.params[0], a.params[1], a.params[2]}, limits);
    } else if (a.family == "kneser") {
        need(2);
        g = build_generalized_kneser({a.params[0], a.params[1], 1}, limits);
    } else if (a.family == "johnson") {
        need(2);
        g = build_johnson(a.params[0], a.params[1], limits);
    } else if (a.family == "johnson-complement") {
        need(2);
        const int n = a.params[0], k = a.params[1];
        if (k < 2 || n < k + 2)
            throw InvalidInput("complement of J(" + std::to_string(n) + "," + std::to_string(k) +
                               ") has no edges; need k >= 2 and n >= k+2");
        g = build_johnson_complement(n, k, limits);
    } else {
        throw InvalidInput("unknown family '" + a.family + "'");
    }
    emit(write_gr(g), a.out);
    return ok;
}

// ---- tw -------------------------------------------------------------------

struct TwArgs {
    std::string graph;
    std::string mode = "exact";
    double time_limit = 60;
    std::string emit_td;
    bool as_json = false;
};

int cmd_tw(const TwArgs& a) {
    const Graph g = load_graph(a.graph);
    const auto start = std::chrono::steady_clock::now();
    TwResult r = a.mode == "exact" ? exact_tw(g, make_budget(a.time_limit)) : upper_bound_heuristic(g);
    if (a.mode == "bounds") r.lower = std::min(lower_bound(g), r.upper);
    const bool exact = r.lower == r.upper;

    if (!a.emit_td.empty() && r.certificate) {
        auto td = decomposition_from_elimination_order(g, *r.certificate);
        write_file(a.emit_td, write_td(td, {"width " + std::to_string(width(td))}));
    }
    if (a.as_json) {
        json j{{"schema_version", kSchemaVersion},
               {"graph", a.graph},
               {"vertices", g.num_vertices()},
               {"edges", g.num_edges()},
               {"mode", a.mode},
               {"lower", r.lower},
               {"upper", r.upper},
               {"exact", exact},
               {"runtime_ms", millis_since(start)}};
        print_json(j, "");
    } else if (exact) {
        std::cout << "tw " << r.upper << '\n';
    } else {
        std::cout << "tw in [" << r.lower << ", " << r.upper << "]\n";
    }
    if (a.mode == "exact" && !exact) {
        std::cerr << "time limit reached before the exact value was settled\n";
        return resource;
    }
    return ok;
}

// ---- decompose / validate --------------------------------------------------

struct DecomposeArgs {
    std::string graph;
    std::string method = "minfill";
    std::string out;
    double time_limit = 60;
};

VertexSet star_independent_set(const Graph& g) {
    const FamilyTag& tag = g.family();
    if (tag.kind == FamilyKind::generalized_kneser && g.labels()) {
        if (ekr_independence_number({tag.n, tag.k, tag.t}).applicable) return ekr_star_family(g);
    }
    return maximum_independent_set(g);
}

int cmd_decompose(const DecomposeArgs& a) {
    const Graph g = load_graph(a.graph);
    std::optional<TreeDecomposition> td;
    if (a.method == "star") {
        td = build_star_decomposition(g, star_independent_set(g));
    } else if (a.method == "minfill") {
        td = decomposition_from_elimination_order(g, *upper_bound_heuristic(g).certificate);
    } else if (a.method == "exact") {
        auto r = exact_tw(g, make_budget(a.time_limit));
        if (!r.is_exact()) {
            std::cerr << "time limit reached; tw in [" << r.lower << ", " << r.upper << "]\n";
            return resource;
        }
        td = decomposition_from_elimination_order(g, *r.certificate);
    } else if (a.method == "six-bag" || a.method == "figure1") {
        if (g == build_johnson_complement(5, 3))
            td = build_six_bag_decomposition(SixBagVariant::J53c).decomposition;
        else if (g == build_johnson_complement(6, 3))
            td = build_six_bag_decomposition(SixBagVariant::J63c).decomposition;
        else
            throw InvalidInput("six-bag needs the complement of J(5,3) or J(6,3) in colex order");
    } else {
        throw InvalidInput("unknown method '" + a.method + "'");
    }
    const long w = width(*td);
    emit(write_td(*td, {"method " + a.method, "width " + std::to_string(w)}), a.out);
    std::cerr << "width " << w << '\n';
    return ok;
}

int cmd_validate(const std::string& gr, const std::string& td_path, bool as_json) {
    const Graph g = load_graph(gr);
    const TdFile td = read_td(read_file(td_path));
    const Verdict v = validate(td.decomposition, g);
    const long w = width(td.decomposition);
    if (as_json) {
        json j{{"schema_version", kSchemaVersion}, {"valid", v.valid()}, {"width", w}};
        if (!v.valid()) j["violation"] = v.message;
        print_json(j, "");
    } else if (v.valid()) {
        std::cout << "valid width " << w << '\n';
    } else {
        std::cout << "invalid: " << v.message << '\n';
    }
    return v.valid() ? ok : negative;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string theorem;
    std::optional<std::size_t> max_vertices;
    std::optional<int> k;
    std::optional<int> t;
    double time_limit = 120;
    bool as_json = false;
    std::string out;
};

struct Case {
    json parameters;
    std::vector<int> key;  // (k, t, n) for ordering
    BigInt predicted;
    std::string computed;
    std::string method;
    bool agree = false;
    double runtime_ms = 0;
};

Case verify_johnson_complement(int n, int k, double time_limit) {
    Case c;
    c.parameters = {{"n", n}, {"k", k}};
    c.key = {k, 0, n};
    c.predicted = tw_formula_johnson_complement(n, k).predicted_tw;
    const auto start = std::chrono::steady_clock::now();
    auto r = exact_tw(build_johnson_complement(n, k), make_budget(time_limit));
    c.runtime_ms = millis_since(start);
    if (r.is_exact()) {
        c.method = "exact";
        c.computed = std::to_string(r.upper);
        c.agree = BigInt(r.upper) == c.predicted;
    } else {
        c.method = "bounds";
        c.computed = std::to_string(r.lower) + ".." + std::to_string(r.upper);
    }
    return c;
}

// Width of the star certificate on the smallest n where the formula applies.
Case verify_kneser(int k, int t, std::size_t cap) {
    Case c;
    const BigInt threshold = t == 1 ? kneser_t1_threshold(k) : kneser_threshold(k, t);
    const int n = threshold.convert_to<int>();
    const ParamTriple p(n, k, t);
    c.parameters = {{"n", n}, {"k", k}, {"t", t}};
    c.key = {k, t, n};
    c.method = "certificate";
    c.predicted = tw_formula_gkneser(p).predicted_tw;
    const auto start = std::chrono::steady_clock::now();
    Graph g = build_generalized_kneser(p, GraphLimits{cap});
    auto td = build_star_decomposition(g, ekr_star_family(g));
    const bool valid = validate(td, g).valid();
    c.runtime_ms = millis_since(start);
    c.computed = valid ? std::to_string(width(td)) : "invalid";
    c.agree = valid && BigInt(width(td)) == c.predicted;
    return c;
}

int cmd_verify(const VerifyArgs& a) {
    std::vector<Case> cases;
    std::string which;
    if (a.theorem == "2" || a.theorem == "johnson-complement") {
        which = "johnson-complement";
        const std::size_t cap = a.max_vertices.value_or(21);
        for (int n = 4; binomial(n, 2) <= cap; ++n)
            for (int k = 2; k + 2 <= n; ++k) {
                if (a.k && *a.k != k) continue;
                if (binomial(n, k) > cap) continue;
                cases.push_back(verify_johnson_complement(n, k, a.time_limit));
            }
    } else if (a.theorem == "1" || a.theorem == "kneser") {
        which = "kneser";
        const std::size_t cap = a.max_vertices.value_or(2100);
        for (int k = 2; k <= 12; ++k)
            for (int t = 1; t < k; ++t) {
                if ((a.k && *a.k != k) || (a.t && *a.t != t)) continue;
                const BigInt n = t == 1 ? kneser_t1_threshold(k) : kneser_threshold(k, t);
                if (binomial(n.convert_to<std::int64_t>(), k) > cap) continue;
                cases.push_back(verify_kneser(k, t, cap));
            }
    } else {
        throw InvalidInput("unknown theorem '" + a.theorem + "' (use 1/kneser or 2/johnson-complement)");
    }
    std::sort(cases.begin(), cases.end(), [](const Case& x, const Case& y) { return x.key < y.key; });

    std::size_t agreeing = 0;
    json rows = json::array();
    for (const auto& c : cases) {
        agreeing += c.agree;
        rows.push_back({{"parameters", c.parameters},
                        {"predicted", big(c.predicted)},
                        {"computed", c.computed},
                        {"method", c.method},
                        {"agree", c.agree},
                        {"runtime_ms", c.runtime_ms}});
    }
    json report{{"schema_version", kSchemaVersion},
                {"family", which},
                {"cases", rows},
                {"summary", {{"cases", cases.size()}, {"agree", agreeing}, {"disagree", cases.size() - agreeing}}}};
    if (!a.out.empty()) print_json(report, a.out);
    if (a.as_json) {
        print_json(report, "");
    } else {
        std::printf("%-4s %-4s %-4s %-12s %-12s %-12s %s\n", "n", "k", "t", "predicted", "computed", "method",
                    "agree");
        for (const auto& c : cases) {
            std::string t = c.parameters.contains("t") ? std::to_string(c.parameters["t"].get<int>()) : "-";
            std::printf("%-4d %-4d %-4s %-12s %-12s %-12s %s\n", c.parameters["n"].get<int>(),
                        c.parameters["k"].get<int>(), t.c_str(), c.predicted.str().c_str(), c.computed.c_str(),
                        c.method.c_str(), c.agree ? "yes" : "NO");
        }
        std::printf("%zu cases, %zu agree\n", cases.size(), agreeing);
    }
    return agreeing == cases.size() ? ok : negative;
}

// ---- inequalities -----------------------------------------------------------

struct InequalityArgs {
    std::string which;
    int k = 0;
    int t = 0;
    std::string range;
    std::string p = "2/3";
    bool as_json = false;
};

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw InvalidInput("range must look like a..b");
    try {
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw InvalidInput("empty range " + text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InvalidInput("range must look like a..b");
    }
}

int cmd_inequalities(const InequalityArgs& a) {
    const Rational prob = parse_rational(a.p);
    std::string name;
    BigInt threshold;
    if (a.which == "2.1" || a.which == "concentration") {
        name = "concentration";
        threshold = kneser_threshold(a.k, a.t);
    } else if (a.which == "2.2" || a.which == "balance") {
        name = "balance";
        threshold = balance_threshold(a.k, a.t, prob);
    } else if (a.which == "dominance") {
        name = "dominance";
        threshold = kneser_threshold(a.k, a.t);
    } else {
        throw InvalidInput("unknown inequality '" + a.which + "' (use 2.1, 2.2 or dominance)");
    }
    auto [lo, hi] = a.range.empty() ? std::pair<int, int>{threshold.convert_to<int>(), threshold.convert_to<int>() + 50}
                                    : parse_range(a.range);
    json rows = json::array();
    std::size_t failures = 0;
    for (int n = lo; n <= hi; ++n) {
        ParamTriple p(n, a.k, a.t);
        bool holds = name == "concentration" ? star_concentration_inequality(p)
                     : name == "balance"     ? separator_balance_inequality(p, prob)
                                             : upper_bound_dominance(p);
        failures += !holds;
        rows.push_back({{"k", a.k}, {"t", a.t}, {"n", n}, {"holds", holds}});
    }
    if (a.as_json) {
        json j{{"schema_version", kSchemaVersion}, {"inequality", name}, {"threshold", big(threshold)}, {"rows", rows}};
        if (name == "balance") j["p"] = to_string(prob);
        print_json(j, "");
    } else {
        for (const auto& r : rows)
            std::printf("k=%d t=%d n=%d %s\n", r["k"].get<int>(), r["t"].get<int>(), r["n"].get<int>(),
                        r["holds"].get<bool>() ? "true" : "false");
        std::printf("%s: %zu of %zu hold\n", name.c_str(), rows.size() - failures, rows.size());
    }
    return failures == 0 ? ok : negative;
}

// ---- shadow / separator -----------------------------------------------------

int cmd_shadow(std::uint64_t m, int n, int k, int g, bool as_json) {
    const auto size = min_shadow_size(m, n, k, g);
    if (as_json)
        print_json({{"schema_version", kSchemaVersion}, {"m", m}, {"n", n}, {"k", k}, {"g", g}, {"min_shadow", size}},
                   "");
    else
        std::cout << size << '\n';
    return ok;
}

struct SeparatorArgs {
    std::string graph;
    std::string p = "2/3";
    std::string check;
    bool min = false;
    bool as_json = false;
};

int cmd_separator(const SeparatorArgs& a) {
    const Graph g = load_graph(a.graph);
    const Rational p = parse_rational(a.p);
    if (a.min == !a.check.empty()) throw InvalidInput("give exactly one of --check X or --min");
    if (a.min) {
        auto best = min_p_separator(g, p);
        if (a.as_json)
            print_json({{"schema_version", kSchemaVersion}, {"p", to_string(p)}, {"order", best.order},
                        {"witness", vertex_list(best.witness)}},
                       "");
        else
            std::cout << "min order " << best.order << " witness " << vertex_list(best.witness).dump() << '\n';
        return ok;
    }
    auto r = check_p_separator(g, parse_vertex_list(a.check, g.num_vertices()), p);
    if (a.as_json) {
        json j{{"schema_version", kSchemaVersion}, {"p", to_string(p)}, {"balanced", r.balanced},
               {"component_sizes", r.component_sizes}};
        if (r.partition) j["sides"] = {r.partition->size_a, r.partition->size_b};
        print_json(j, "");
    } else {
        std::cout << (r.balanced ? "balanced" : "not balanced") << " components " << json(r.component_sizes).dump()
                  << '\n';
    }
    return r.balanced ? ok : negative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Treewidth tools for Kneser, Johnson and Johnson-complement graphs"};
    app.require_subcommand(1);
    int rc = ok;

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "write a PACE .gr file for a graph family");
    g->add_option("family", gen.family, "gkneser | kneser | johnson | johnson-complement")->required();
    g->add_option("params", gen.params, "n k [t]")->required();
    g->add_option("-o,--out", gen.out, "output path (default stdout)");
    g->add_option("--max-vertices", gen.max_vertices, "vertex cap");
    g->callback([&] { rc = cmd_gen(gen); });

    TwArgs tw;
    auto* t = app.add_subcommand("tw", "treewidth of a .gr file");
    t->add_option("graph", tw.graph)->required()->check(CLI::ExistingFile);
    t->add_option("--mode", tw.mode)->check(CLI::IsMember({"exact", "bounds"}));
    t->add_option("--time-limit", tw.time_limit, "seconds");
    t->add_option("--emit-td", tw.emit_td, "write the certificate decomposition here");
    t->add_flag("--json", tw.as_json);
    t->callback([&] { rc = cmd_tw(tw); });

    DecomposeArgs dec;
    auto* d = app.add_subcommand("decompose", "write a tree decomposition of a .gr file");
    d->add_option("graph", dec.graph)->required()->check(CLI::ExistingFile);
    d->add_option("--method", dec.method)->check(CLI::IsMember({"star", "minfill", "exact", "six-bag", "figure1"}));
    d->add_option("-o,--out", dec.out, "output path (default stdout)");
    d->add_option("--time-limit", dec.time_limit, "seconds, for --method exact");
    d->callback([&] { rc = cmd_decompose(dec); });

    std::string val_gr, val_td;
    bool val_json = false;
    auto* v = app.add_subcommand("validate", "check a .td file against a .gr file");
    v->add_option("graph", val_gr)->required()->check(CLI::ExistingFile);
    v->add_option("decomposition", val_td)->required()->check(CLI::ExistingFile);
    v->add_flag("--json", val_json);
    v->callback([&] { rc = cmd_validate(val_gr, val_td, val_json); });

    VerifyArgs ver;
    auto* vf = app.add_subcommand("verify", "compare closed-form treewidth with computed values");
    vf->add_option("theorem", ver.theorem, "1 | kneser | 2 | johnson-complement")->required();
    vf->add_option("--max-vertices", ver.max_vertices, "instance size cap (default 2100 for 1, 21 for 2)");
    vf->add_option("--k", ver.k);
    vf->add_option("--t", ver.t);
    vf->add_option("--time-limit", ver.time_limit, "seconds per exact instance");
    vf->add_option("--out", ver.out, "also write the JSON report here");
    vf->add_flag("--json", ver.as_json);
    vf->callback([&] { rc = cmd_verify(ver); });

    InequalityArgs ineq;
    auto* in = app.add_subcommand("inequalities", "sweep one of the counting inequalities over n");
    in->add_option("which", ineq.which, "2.1 | concentration | 2.2 | balance | dominance")->required();
    in->add_option("--k", ineq.k)->required();
    in->add_option("--t", ineq.t)->required();
    in->add_option("--range", ineq.range, "a..b (default: threshold..threshold+50)");
    in->add_option("--p", ineq.p, "num/den, for the balance inequality");
    in->add_flag("--json", ineq.as_json);
    in->callback([&] { rc = cmd_inequalities(ineq); });

    std::uint64_t sm = 0;
    int sn = 0, sk = 0, sg = 0;
    bool sjson = false;
    auto* sh = app.add_subcommand("shadow", "minimum g-shadow of m k-subsets of [n]");
    sh->add_option("m", sm)->required();
    sh->add_option("n", sn)->required();
    sh->add_option("k", sk)->required();
    sh->add_option("g", sg)->required();
    sh->add_flag("--json", sjson);
    sh->callback([&] { rc = cmd_shadow(sm, sn, sk, sg, sjson); });

    SeparatorArgs sep;
    auto* sp = app.add_subcommand("separator", "check or minimise balanced separators");
    sp->add_option("graph", sep.graph)->required()->check(CLI::ExistingFile);
    sp->add_option("--p", sep.p, "num/den");
    sp->add_option("--check", sep.check, "1-based vertex ids, comma separated");
    sp->add_flag("--min", sep.min);
    sp->add_flag("--json", sep.as_json);
    sp->callback([&] { rc = cmd_separator(sep); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : invalid_input;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return invalid_input;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return invalid_input;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return resource;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return resource;
    }
    return rc;
}
