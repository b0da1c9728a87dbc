#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "wcprod/graph.hpp"

namespace wcprod {

/// Encodes G in graph6 without the optional ">>graph6<<" header.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 string. Accepts the ">>graph6<<" header and a
/// trailing newline. Throws ParseError with the offending byte offset.
Graph from_graph6(std::string_view text);

/// Plain edge-list text: a line "n m" followed by m lines "u v", 0-indexed.
std::string to_edge_list(const Graph& g);
/// Throws ParseError whose position is the 0-based line number.
Graph from_edge_list_text(std::string_view text);

/// Reads a graph file, detecting graph6 versus edge-list content.
Graph read_graph_file(const std::string& path);

}  // namespace wcprod
