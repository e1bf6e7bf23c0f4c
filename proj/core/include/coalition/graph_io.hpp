#pragma once

#include "coalition/graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace coalition {

/// Largest order handled by the single-byte graph6 header.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Decodes one graph6 line (no trailing newline). Throws ParseError on a
/// byte outside [63,126], a truncated payload or trailing bytes.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6. Throws PreconditionError when order() > 62.
std::string emit_graph6(const Graph& g);

/// Edge-list text: first significant line is n, then one "u v" pair per
/// line. '#' comments and blank lines are ignored; duplicates are merged.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

enum class GraphFormat { graph6, edge_list };

/// Guesses the format from the first significant line: edge lists start
/// with a decimal digit, graph6 never does.
GraphFormat sniff_format(std::string_view text);

/// Reads every graph in the text. graph6 input may hold one graph per line;
/// edge-list input holds exactly one graph.
std::vector<Graph> read_graphs(std::string_view text, GraphFormat format);

} // namespace coalition
