#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "steklov/graph.hpp"

namespace steklov {

/// Parses the graph JSON format
///   {"n": <int>, "edges": [[i, j] | [i, j, w], ...], "boundary": [ids...]}
/// Throws ParseError on malformed documents, loops, duplicate edges, ids >= n
/// and non-positive weights. The axioms of a graph with boundary are not
/// checked here; see validate().
GraphWithBoundary parse_graph_json(std::string_view text);
GraphWithBoundary read_graph_file(const std::filesystem::path& path);

/// Inverse of parse_graph_json. Unit-weight edges are written as [i, j].
std::string to_graph_json(const GraphWithBoundary& g);
void write_graph_file(const GraphWithBoundary& g, const std::filesystem::path& path);

}  // namespace steklov
