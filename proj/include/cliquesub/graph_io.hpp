#pragma once

#include <cliquesub/graph.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cliquesub {

enum class GraphFormat { edge_list, graph6 };

/// Edge list: optional "n <count>" header, then one "u v" pair per line, 0-indexed.
/// Blank lines and lines starting with '#' are skipped. Without a header, n is one more
/// than the largest endpoint.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph & g);

/// Standard graph6 encoding of a single graph (optional ">>graph6<<" prefix accepted).
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph & g);

Graph read_graph(std::istream & in, GraphFormat format);
void write_graph(std::ostream & out, const Graph & g, GraphFormat format);

/// ".g6" and ".graph6" select graph6, anything else the edge list.
GraphFormat format_for_path(const std::filesystem::path & path);
Graph read_graph_file(const std::filesystem::path & path);
Graph read_graph_file(const std::filesystem::path & path, GraphFormat format);
void write_graph_file(const std::filesystem::path & path, const Graph & g, GraphFormat format);

} // namespace cliquesub
