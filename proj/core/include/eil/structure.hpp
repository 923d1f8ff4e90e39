#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <optional>
#include <vector>

#include "eil/error.hpp"
#include "eil/graph.hpp"
#include "eil/matching.hpp"

namespace eil {

/// Edges incident to a degree-1 vertex.
std::vector<Edge> pendant_edges(const Graph& g);

/// 5-cycles with no two vertices that are adjacent in g and both of degree
/// >= 3. A chord joins two such vertices, so every basic cycle is induced.
std::vector<FiveCycle> basic_five_cycles(const Graph& g, const Budget& budget = Budget{});

/// Witness for membership in the pendant/basic-cycle class.
struct PCDecomposition {
  /// (support, leaf); for an isolated edge the smaller id is the support.
  std::vector<std::pair<Vertex, Vertex>> pendant_pairs;
  std::vector<std::array<Vertex, 5>> basic_cycles;
};

struct PCResult {
  bool member = false;
  std::optional<PCDecomposition> witness;
  /// Which condition failed, for reports.
  std::string reason;
};

/// Checks that P(G) and C(G) partition V(G), the pendant edges are a
/// perfect matching of P(G), and the basic 5-cycles partition C(G).
PCResult pc_membership(const Graph& g, const Budget& budget = Budget{});

enum class DecomposabilityRule {
  /// Enumerate maximal independent sets of G - v; each must be maximal in G.
  literal,
  /// Equivalent test: no maximal independent set of G - N[v] dominates N(v).
  shedding,
};

bool is_vertex_decomposable(const Graph& g, DecomposabilityRule rule = DecomposabilityRule::literal,
                            const Budget& budget = Budget{});

/// Calls `f(mask)` for each maximal independent set inside `allowed`; stops
/// early when f returns false. Returns false iff stopped early.
bool for_each_maximal_independent_set(std::span<const Mask> adj, Mask allowed,
                                      const std::function<bool(Mask)>& f);

/// Every maximal independent set has the same size.
bool is_well_covered(const Graph& g, const Budget& budget = Budget{});

/// Cohen-Macaulay test valid for connected graphs of girth >= 5: a single
/// vertex, or membership in the pendant/basic-cycle class. Throws
/// PreconditionError outside that domain. With `cross_check`, also requires
/// agreement with "vertex decomposable and well-covered" (the non-pure
/// recursion alone accepts P3) and throws ConsistencyError otherwise.
bool is_cm_girth5(const Graph& g, bool cross_check = false, const Budget& budget = Budget{});

}  // namespace eil
