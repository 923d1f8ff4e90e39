#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eil/betti.hpp"
#include "eil/chordal.hpp"
#include "eil/error.hpp"
#include "eil/graph.hpp"
#include "eil/matching.hpp"

namespace eil {

/// Every graph invariant the bounds refer to. A value is absent when its
/// search exceeded the budget.
struct Invariants {
  std::size_t order = 0;
  std::size_t edges = 0;
  std::optional<std::size_t> match;
  std::optional<std::size_t> min_match;
  std::optional<std::size_t> ind_match;
  std::optional<std::size_t> ind_match_k2c5;
  std::optional<std::size_t> min_match_k2c5;
  std::optional<std::size_t> cochord;
  Girth girth;
  std::optional<std::size_t> independence_number;
  /// Present when girth >= 5: every component is a vertex or lies in the
  /// pendant/basic-cycle class.
  std::optional<bool> is_cm_girth5;

  std::optional<Matching> maximum_matching;
  std::optional<Matching> minimum_maximal_matching;
  std::optional<Matching> maximum_induced_matching;
  std::optional<HSubgraph> ind_match_k2c5_witness;
  std::optional<HSubgraph> min_match_k2c5_witness;
  std::optional<CochordalCover> cochord_witness;
  std::vector<std::string> skipped;
};

Invariants compute_invariants(const Graph& g, const Budget& budget = Budget{});

enum class CheckStatus { holds, violated, skipped };

const char* status_name(CheckStatus s);

struct Check {
  /// "a".."h", or "bracket" for lower bound <= upper bound.
  std::string id;
  std::string statement;
  std::optional<long> lhs;
  /// "<=", ">=", "=", or "in" (rhs and rhs_alt both allowed).
  std::string relation;
  std::optional<long> rhs;
  std::optional<long> rhs_alt;
  CheckStatus status = CheckStatus::skipped;
  std::string note;
};

struct BoundsReport {
  std::string name;
  std::string graph6;
  std::size_t s = 1;
  Field field = Field::gf2;
  Invariants invariants;
  std::optional<int> reg_ideal;
  std::optional<int> reg_quotient;
  std::optional<std::size_t> polarized_variables;
  std::optional<BettiTable> betti;
  std::vector<Check> checks;
  /// Both sides of 2s + ind-match - 1 < reg < 2s + cochord - 1 certified.
  bool strict_gap = false;

  std::size_t count(CheckStatus status) const;
  bool any_violated() const { return count(CheckStatus::violated) > 0; }
  const Check* find(const std::string& id) const;
};

/// Computes invariants and reg(I(G)^s), then evaluates checks (a)-(h).
/// Never throws for budget reasons: affected checks are marked skipped.
BoundsReport evaluate_bounds(const Graph& g, std::size_t s, Field field = Field::gf2,
                             const Budget& budget = Budget{}, std::string name = {});

/// Same, reusing invariants already computed for g.
BoundsReport evaluate_bounds(const Graph& g, const Invariants& inv, std::size_t s, Field field,
                             const Budget& budget, std::string name = {});

enum class HereditaryInvariant { cochord, min_match, min_match_k2c5 };

const char* invariant_name(HereditaryInvariant f);
HereditaryInvariant parse_hereditary_invariant(std::string_view name);

/// f(H) = invariant(H) + 1 evaluated on G, G - w and G - N[w].
struct WitnessRecord {
  HereditaryInvariant invariant = HereditaryInvariant::cochord;
  bool found = false;
  Vertex w = 0;
  std::size_t f_g = 0;
  std::size_t f_minus_w = 0;
  std::size_t f_minus_closed = 0;
  /// f(G - N[w]) <= f(G) - 1, the form the deletion lemmas give.
  bool strict = false;
  /// For cochord: the vertex the cover construction picks, and whether it
  /// satisfies the strict form.
  std::optional<Vertex> constructed_w;
  std::optional<bool> constructed_strict;
};

/// First vertex satisfying f(G - w) <= f(G) and f(G - N[w]) <= f(G) - 1,
/// else the first satisfying f(G - w) <= f(G) and
/// f(G - N[w]) <= max{f(G) - 1, 2}; found = false when neither exists.
/// Throws PreconditionError when g has no edge.
WitnessRecord hereditary_witness_search(const Graph& g, HereditaryInvariant invariant,
                                        const Budget& budget = Budget{});

std::size_t hereditary_value(const Graph& g, HereditaryInvariant invariant, const Budget& budget = Budget{});

struct UnionCheck {
  int reg_union_s = 0;
  int reg_a_s = 0;
  int reg_b = 0;
  bool holds = false;
};

/// reg(I(A + B)^s) >= reg(I(A)^s) + reg(I(B)) - 1 with every term exact.
UnionCheck disjoint_union_lower_check(const Graph& a, const Graph& b, std::size_t s, Field field = Field::gf2,
                                      const Budget& budget = Budget{});

}  // namespace eil
