#pragma once

// PACE-2017 text formats.
//
//   .gr   c <comment>
//         p tw <n_vertices> <n_edges>
//         <u> <v>                       one line per edge, 1-based ids
//
//   .td   c <comment>
//         s td <n_bags> <max_bag_size> <n_vertices>
//         b <bag_id> <v> <v> ...        one line per bag, 1-based ids
//         <i> <j>                       one line per tree edge
//
// Writers emit comments first, then the header, then body lines in canonical
// order (edges sorted, bags by id, bag contents ascending), so a canonical
// file survives read -> write byte for byte. A comment of the form
// "family <tag>" records how a graph was generated.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kntw/graph.hpp"
#include "kntw/tree_decomposition.hpp"

namespace kntw {

struct GrFile {
    Graph graph;
    std::vector<std::string> comments;  // text after "c ", in file order
};

struct TdFile {
    TreeDecomposition decomposition;
    std::vector<std::string> comments;
};

/// Comments generated for a graph: its family tag, when it has one.
std::vector<std::string> default_comments(const Graph& g);

std::string write_gr(const Graph& g);
std::string write_gr(const Graph& g, const std::vector<std::string>& comments);
std::string write_gr(const GrFile& file);

/// Throws ParseError. A family comment restores the tag and subset labels, and
/// is rejected if the edges disagree with the named construction.
GrFile read_gr(std::string_view text);

std::string write_td(const TreeDecomposition& td, const std::vector<std::string>& comments = {});
std::string write_td(const TdFile& file);
TdFile read_td(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace kntw
