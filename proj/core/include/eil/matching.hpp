#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "eil/error.hpp"
#include "eil/graph.hpp"

namespace eil {

/// Pairwise disjoint edges of a host graph.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
};

/// A 5-cycle given by its cyclic vertex sequence, normalized to start at the
/// smallest vertex with the smaller of its two cycle neighbors second.
struct FiveCycle {
  std::array<Vertex, 5> seq{};
  Mask vertices = 0;
  /// No chords in the host.
  bool induced = false;

  friend bool operator==(const FiveCycle& a, const FiveCycle& b) { return a.seq == b.seq; }
};

/// Every 5-cycle subgraph of g, chorded or not, in lexicographic order.
/// Requires g.order() <= 64.
std::vector<FiveCycle> five_cycles(const Graph& g);

/// Subgraph whose components are single edges and 5-cycles.
struct HSubgraph {
  std::vector<Edge> k2;
  std::vector<std::array<Vertex, 5>> c5;

  std::size_t match_number() const { return k2.size() + 2 * c5.size(); }
  VertexSet vertices(std::size_t host_order) const;
};

enum class CycleMode {
  /// C5 components may have chords in the host.
  allow_chords,
  /// C5 components must be induced 5-cycles of the host.
  induced_only,
};

/// Throws InputError unless every component lies in `host` and components
/// are vertex-disjoint. With `require_induced`, H must also be an induced
/// subgraph of host.
void validate_h_subgraph(const Graph& host, const HSubgraph& h, bool require_induced = false);

bool is_matching(const Graph& host, const Matching& m);
bool is_maximal_matching(const Graph& host, const Matching& m);
bool is_induced_matching(const Graph& host, const Matching& m);

std::size_t matching_number(const Graph& g, const Budget& budget = Budget{});
Matching maximum_matching(const Graph& g, const Budget& budget = Budget{});

/// Minimum size of a maximal matching; 0 iff g has no edge.
std::size_t min_maximal_matching_number(const Graph& g, const Budget& budget = Budget{});
Matching minimum_maximal_matching(const Graph& g, const Budget& budget = Budget{});

std::size_t induced_matching_number(const Graph& g, const Budget& budget = Budget{});
Matching maximum_induced_matching(const Graph& g, const Budget& budget = Budget{});

/// Two edges with no edge of g between them. Polynomial scan.
bool has_gap(const Graph& g);

/// Maximal iff host - V(H) has no edge (K2 is always available).
bool is_maximal_h_subgraph(const Graph& host, const HSubgraph& h);

struct HMatchResult {
  std::size_t value = 0;
  HSubgraph witness;
};

/// max{ m + 2s : an induced subgraph of g is m K2's plus s C5's }.
HMatchResult ind_match_k2c5(const Graph& g, const Budget& budget = Budget{});

/// min{ m + 2s : a maximal {K2,C5}-subgraph of g has m K2's and s C5's }.
HMatchResult min_match_k2c5(const Graph& g, CycleMode mode = CycleMode::allow_chords,
                            const Budget& budget = Budget{});

}  // namespace eil
