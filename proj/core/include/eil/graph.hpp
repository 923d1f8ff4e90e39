#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eil/vertex_set.hpp"

namespace eil {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on {0..n-1}. Immutable once built: every
/// operation that removes vertices returns a new graph.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Validates the pairs (no loops, endpoints < n); duplicates collapse.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  VertexSet closed_neighborhood(Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).contains(v); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Display label; defaults to the decimal id.
  std::string label(Vertex v) const;
  bool has_labels() const { return !labels_.empty(); }
  Graph with_labels(std::vector<std::string> labels) const;

  /// Per-vertex neighbor masks. Requires order() <= 64.
  std::vector<Mask> adjacency_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
  std::size_t num_edges_ = 0;
};

/// Result of removing vertices: the new graph plus, for each new id, the id
/// it had in the host.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> host_ids;
};

Graph complement(const Graph& g);

/// Reindexes W in increasing order; labels of the host are retained.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop);
InducedSubgraph delete_vertex(const Graph& g, Vertex w);
/// G - N_G[w].
InducedSubgraph delete_closed_neighborhood(const Graph& g, Vertex w);

/// Length of a shortest cycle; empty optional for forests.
struct Girth {
  std::optional<std::size_t> length;

  bool is_infinite() const { return !length.has_value(); }
  /// Forests satisfy every lower bound.
  bool at_least(std::size_t k) const { return !length || *length >= k; }
  friend bool operator==(const Girth&, const Girth&) = default;
};

Girth girth(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

struct Budget;
std::size_t independence_number(const Graph& g, const Budget& budget);
std::size_t independence_number(const Graph& g);

/// Maximum independent set inside `allowed`, on word masks.
int max_independent_set(std::span<const Mask> adj, Mask allowed);

}  // namespace eil
