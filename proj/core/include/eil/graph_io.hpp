#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eil/graph.hpp"

namespace eil {

enum class GraphFormat { graph6, edgelist, json };

/// Header-less graph6 (McKay). Accepts an optional trailing newline.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// First line "n m", then m lines "u v" (0-indexed).
Graph parse_edgelist(std::string_view text);
std::string to_edgelist(const Graph& g);

/// {"n": int, "edges": [[u,v],...], "labels": {"id": "name", ...}}
Graph parse_graph_json(std::string_view text);
std::string to_graph_json(const Graph& g);

GraphFormat parse_format_name(std::string_view name);
/// Guesses from the file extension: .g6/.graph6, .json, anything else is an edge list.
GraphFormat guess_format(std::string_view path);

Graph read_graph(std::istream& in, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format);
/// Every non-empty line parsed as its own graph6 record.
std::vector<Graph> read_graph6_lines(std::istream& in);

std::string format_graph(const Graph& g, GraphFormat format);

}  // namespace eil
