#include "kntw/pace_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "kntw/errors.hpp"

namespace kntw {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({++number, line});
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

long parse_number(std::string_view token, std::size_t line) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

bool is_comment(std::string_view line) {
    return !line.empty() && line[0] == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t');
}

std::string comment_text(std::string_view line) {
    line.remove_prefix(1);
    if (!line.empty() && line[0] == ' ') line.remove_prefix(1);
    return std::string(line);
}

void append_comments(std::ostringstream& os, const std::vector<std::string>& comments) {
    for (const auto& c : comments) {
        if (c.empty())
            os << "c\n";
        else
            os << "c " << c << '\n';
    }
}

constexpr std::string_view kFamilyPrefix = "family ";

Graph rebuild(const FamilyTag& tag) {
    switch (tag.kind) {
        case FamilyKind::generalized_kneser:
            return build_generalized_kneser({tag.n, tag.k, tag.t});
        case FamilyKind::johnson:
            return build_johnson(tag.n, tag.k);
        case FamilyKind::johnson_complement:
            return build_johnson_complement(tag.n, tag.k);
        case FamilyKind::generic:
            break;
    }
    return Graph();
}

}  // namespace

std::vector<std::string> default_comments(const Graph& g) {
    if (g.family().kind == FamilyKind::generic) return {};
    return {std::string(kFamilyPrefix) + g.family().describe()};
}

std::string write_gr(const Graph& g) { return write_gr(g, default_comments(g)); }

std::string write_gr(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream os;
    append_comments(os, comments);
    os << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

std::string write_gr(const GrFile& file) { return write_gr(file.graph, file.comments); }

GrFile read_gr(std::string_view text) {
    std::vector<std::string> comments;
    std::optional<Graph> graph;
    std::size_t declared_edges = 0;
    std::size_t header_line = 0;
    for (const auto& [number, line] : split_lines(text)) {
        if (is_comment(line)) {
            comments.push_back(comment_text(line));
            continue;
        }
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok[0] == "p") {
            if (graph) throw ParseError(number, "second 'p' header");
            if (tok.size() != 4 || tok[1] != "tw")
                throw ParseError(number, "expected 'p tw <n_vertices> <n_edges>'");
            long n = parse_number(tok[2], number);
            long m = parse_number(tok[3], number);
            if (n < 0 || m < 0) throw ParseError(number, "negative count in header");
            graph.emplace(static_cast<std::size_t>(n));
            declared_edges = static_cast<std::size_t>(m);
            header_line = number;
            continue;
        }
        if (!graph) throw ParseError(number, "edge before the 'p tw' header");
        if (tok.size() != 2) throw ParseError(number, "expected '<u> <v>'");
        long u = parse_number(tok[0], number);
        long v = parse_number(tok[1], number);
        const auto n = static_cast<long>(graph->num_vertices());
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError(number, "vertex id outside 1.." + std::to_string(n));
        if (u == v) throw ParseError(number, "self-loop at vertex " + std::to_string(u));
        if (graph->adjacent(static_cast<int>(u - 1), static_cast<int>(v - 1)))
            throw ParseError(number, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        graph->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (!graph) throw ParseError(0, "missing 'p tw' header");
    if (graph->num_edges() != declared_edges)
        throw ParseError(header_line, "header declares " + std::to_string(declared_edges) +
                                          " edges, file has " + std::to_string(graph->num_edges()));

    for (const auto& c : comments) {
        if (c.rfind(kFamilyPrefix, 0) != 0) continue;
        FamilyTag tag;
        Graph expected;
        try {
            tag = FamilyTag::parse(c.substr(kFamilyPrefix.size()));
            expected = rebuild(tag);
        } catch (const std::exception& e) {
            throw ParseError(0, std::string("bad family comment: ") + e.what());
        }
        if (tag.kind == FamilyKind::generic) break;
        if (!(expected == *graph))
            throw ParseError(0, "edges disagree with 'family " + tag.describe() + "'");
        graph->set_family(tag);
        graph->set_labels(*expected.labels());
        break;
    }
    return {std::move(*graph), std::move(comments)};
}

std::string write_td(const TreeDecomposition& td, const std::vector<std::string>& comments) {
    std::ostringstream os;
    append_comments(os, comments);
    os << "s td " << td.num_nodes() << ' ' << td.max_bag_size() << ' ' << td.host_vertices() << '\n';
    for (std::size_t i = 0; i < td.num_nodes(); ++i) {
        os << "b " << i + 1;
        td.bag(i).for_each([&](std::size_t v) { os << ' ' << v + 1; });
        os << '\n';
    }
    for (auto [a, b] : td.tree_edges()) os << a + 1 << ' ' << b + 1 << '\n';
    return os.str();
}

std::string write_td(const TdFile& file) { return write_td(file.decomposition, file.comments); }

TdFile read_td(std::string_view text) {
    std::vector<std::string> comments;
    bool have_header = false;
    std::size_t n_bags = 0, max_bag = 0, n_vertices = 0, header_line = 0;
    std::vector<std::optional<VertexSet>> bags;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [number, line] : split_lines(text)) {
        if (is_comment(line)) {
            comments.push_back(comment_text(line));
            continue;
        }
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok[0] == "s") {
            if (have_header) throw ParseError(number, "second 's' header");
            if (tok.size() != 5 || tok[1] != "td")
                throw ParseError(number, "expected 's td <n_bags> <max_bag_size> <n_vertices>'");
            long b = parse_number(tok[2], number);
            long w = parse_number(tok[3], number);
            long n = parse_number(tok[4], number);
            if (b < 0 || w < 0 || n < 0) throw ParseError(number, "negative count in header");
            n_bags = static_cast<std::size_t>(b);
            max_bag = static_cast<std::size_t>(w);
            n_vertices = static_cast<std::size_t>(n);
            bags.assign(n_bags, std::nullopt);
            have_header = true;
            header_line = number;
            continue;
        }
        if (!have_header) throw ParseError(number, "content before the 's td' header");
        if (tok[0] == "b") {
            if (tok.size() < 2) throw ParseError(number, "bag line without an id");
            long id = parse_number(tok[1], number);
            if (id < 1 || static_cast<std::size_t>(id) > n_bags)
                throw ParseError(number, "bag id outside 1.." + std::to_string(n_bags));
            auto& slot = bags[static_cast<std::size_t>(id - 1)];
            if (slot) throw ParseError(number, "bag " + std::to_string(id) + " listed twice");
            VertexSet bag(n_vertices);
            for (std::size_t i = 2; i < tok.size(); ++i) {
                long v = parse_number(tok[i], number);
                if (v < 1 || static_cast<std::size_t>(v) > n_vertices)
                    throw ParseError(number, "vertex id outside 1.." + std::to_string(n_vertices));
                bag.insert(static_cast<std::size_t>(v - 1));
            }
            slot = std::move(bag);
            continue;
        }
        if (tok.size() != 2) throw ParseError(number, "expected a bag line or '<i> <j>'");
        long a = parse_number(tok[0], number);
        long b = parse_number(tok[1], number);
        if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n_bags || static_cast<std::size_t>(b) > n_bags)
            throw ParseError(number, "tree edge references a bag outside 1.." + std::to_string(n_bags));
        edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (!have_header) throw ParseError(0, "missing 's td' header");
    std::vector<VertexSet> complete;
    complete.reserve(n_bags);
    for (std::size_t i = 0; i < n_bags; ++i) {
        if (!bags[i]) throw ParseError(header_line, "bag " + std::to_string(i + 1) + " is missing");
        complete.push_back(std::move(*bags[i]));
    }
    try {
        TreeDecomposition td(n_vertices, std::move(complete), std::move(edges));
        if (td.max_bag_size() != max_bag)
            throw ParseError(header_line, "header declares max bag size " + std::to_string(max_bag) +
                                              ", largest bag has " + std::to_string(td.max_bag_size()));
        return {std::move(td), std::move(comments)};
    } catch (const InvalidInput& e) {
        throw ParseError(header_line, e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << content;
}

}  // namespace kntw
