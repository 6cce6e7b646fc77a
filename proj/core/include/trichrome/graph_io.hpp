#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "trichrome/graph.hpp"

namespace trichrome {

enum class GraphFormat { edge_list, dimacs };

/// "edge_list" / "dimacs". Throws PreconditionError for anything else.
GraphFormat parse_graph_format(std::string_view name);

/// Picks dimacs for *.col / *.dimacs paths, edge_list otherwise.
GraphFormat guess_graph_format(std::string_view path);

/// Edge list: first non-comment line "n m", then m lines "u v" (0-based).
/// DIMACS: "c" comments, one "p edge n m" line, "e u v" lines (1-based).
/// '#' starts a comment in the edge list format.
///
/// Throws ParseError (with line number) on malformed lines or a wrong edge
/// count, RangeError on out-of-range ids, and ParseError on self-loops.
Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph_file(const std::string& path, GraphFormat format);

void save_graph(std::ostream& out, const Graph& g, GraphFormat format);
void save_graph_file(const std::string& path, const Graph& g, GraphFormat format);

}  // namespace trichrome
