#pragma once

#include <cstddef>
#include <vector>

#include "eil/error.hpp"
#include "eil/graph.hpp"

namespace eil {

struct ChordalityCertificate {
  bool chordal = false;
  /// Perfect elimination ordering (reverse maximum-cardinality-search order)
  /// when chordal.
  std::vector<Vertex> elimination_order;
  /// A chordless cycle of length >= 4, in cyclic order, when not chordal.
  std::vector<Vertex> induced_cycle;
};

ChordalityCertificate check_chordal(const Graph& g);
bool is_chordal(const Graph& g);

/// True iff `order` is a perfect elimination ordering of g.
bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order);

/// Vertices whose open neighborhood is a clique, ascending.
std::vector<Vertex> simplicial_vertices(const Graph& g);

bool is_cochordal(const Graph& g);

/// Edge subsets of a host graph, each spanning a co-chordal subgraph, whose
/// union is every edge of the host. Parts may overlap.
struct CochordalCover {
  std::vector<std::vector<Edge>> parts;

  std::size_t size() const { return parts.size(); }
};

/// The subgraph spanned by `edges` on their endpoints only.
InducedSubgraph edge_subgraph(const Graph& host, const std::vector<Edge>& edges);

/// Throws InputError naming the first failing condition.
void validate_cover(const Graph& host, const CochordalCover& cover);
bool is_valid_cover(const Graph& host, const CochordalCover& cover);

struct CochordResult {
  std::size_t value = 0;
  CochordalCover witness;
};

/// Exact co-chordal cover number. Candidate parts are the maximal co-chordal
/// subgraphs, obtained as complements of elimination fill-ins of the
/// complement; the minimum cover over them is found by branch and bound.
CochordResult cochord_number(const Graph& g, const Budget& budget = Budget{});

/// Inclusion-maximal co-chordal edge sets of g, as masks over g.edges().
std::vector<Mask> maximal_cochordal_parts(const Graph& g, const Budget& budget = Budget{});

struct CochordLemmaWitness {
  /// Host id of a simplicial vertex of the complement of the first part.
  Vertex w = 0;
  /// G - N_G[w].
  InducedSubgraph remainder;
  /// Remaining parts restricted to the remainder, empty parts dropped.
  CochordalCover cover;
};

/// Builds the vertex and smaller cover used to show that deleting a closed
/// neighborhood lowers cochord by one; the result is re-validated.
CochordLemmaWitness lemma_cochord_witness(const Graph& g, const CochordalCover& cover);

}  // namespace eil
