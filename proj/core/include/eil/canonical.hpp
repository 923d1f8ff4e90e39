#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "eil/graph.hpp"

namespace eil {

/// Isomorphism-invariant code: row i is the neighbor mask of the vertex
/// placed at position i by the canonical labeling. Requires n <= 64.
struct CanonicalCode {
  std::size_t n = 0;
  std::vector<Mask> rows;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Individualization-refinement search over color-refined partitions,
/// branching on one representative per twin class.
CanonicalCode canonical_code(const Graph& g);
/// The graph relabeled into canonical order.
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// True iff `perm` (old id -> new id) maps a onto b exactly.
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& perm);

struct EnumerationOptions {
  bool connected_only = false;
  /// Must be closed under taking induced subgraphs; graphs failing it are
  /// neither reported nor extended.
  std::function<bool(const Graph&)> hereditary_filter;
};

/// One representative per isomorphism class, for every order 1..max_n,
/// in canonical form, ordered by (order, code).
std::vector<Graph> enumerate_graphs(std::size_t max_n, const EnumerationOptions& options = {});

/// Graphs with exactly n vertices.
std::vector<Graph> enumerate_graphs_of_order(std::size_t n, const EnumerationOptions& options = {});

/// G(n, p) with a 64-bit Mersenne twister seeded by `seed`.
Graph random_graph(std::uint64_t seed, std::size_t n, double p = 0.5);
/// Forest on n vertices: vertex i > 0 attaches to a uniform earlier vertex
/// with probability `attach`.
Graph random_forest(std::uint64_t seed, std::size_t n, double attach = 0.85);

}  // namespace eil
