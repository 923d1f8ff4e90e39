#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "eil/graph.hpp"

namespace eil {

/// Adds a degree-1 neighbor n+i to every vertex i.
Graph whisker(const Graph& g);

/// n 5-cycles v_1^i..v_5^i laid out cycle by cycle (vertex 5(i-1)+(j-1) is
/// v_j^i), with bridges v_3^i v_1^{i+1}.
Graph build_Hn(std::size_t n);

/// Glues u in g1 to x in g2. Vertices of g1 - u come first, then g2 - x, and
/// the merged vertex z is last; z is adjacent to N(u) and N(x).
Graph identify_vertices(const Graph& g1, Vertex u, const Graph& g2, Vertex x);

/// identify_vertices(h, u, whisker(build_Hn(n)), x); x must be a vertex of
/// H_n itself, not a whisker.
Graph build_Gn(const Graph& h, Vertex u, std::size_t n, Vertex x);

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph disjoint_union(const std::vector<Graph>& parts);

enum class StandardKind { cycle, path, complete, star, empty };
StandardKind parse_standard_kind(std::string_view name);
Graph build_standard(StandardKind kind, std::size_t size);

}  // namespace eil
