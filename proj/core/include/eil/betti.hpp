#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

#include "eil/error.hpp"
#include "eil/graph.hpp"
#include "eil/monomial.hpp"
#include "eil/simplicial.hpp"

namespace eil {

/// Graded Betti numbers of S/I. Only nonzero entries are stored.
struct BettiTable {
  Field field = Field::gf2;
  std::map<std::pair<int, int>, std::uint64_t> entries;

  std::uint64_t at(int i, int j) const;
  /// max{j - i}; 0 for an empty table.
  int reg_quotient() const;
  /// Regularity of I itself: 1 + max{j - i : i >= 1}. Zero for the zero ideal.
  int reg_ideal() const;
  int projective_dimension() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct BettiOptions {
  Field field = Field::gf2;
  /// Compare every homology computation with the reduced Euler
  /// characteristic counted subset by subset; throws ConsistencyError.
  bool check_euler = false;
};

/// Hochster's formula over the Stanley-Reisner complex of a squarefree ideal.
/// Only the empty set and unions of generator supports are visited: any
/// other W has a cone point in the induced subcomplex. Requires
/// num_variables() <= budget.subset.
BettiTable betti_table(const MonomialIdeal& squarefree, const BettiOptions& options,
                       const Budget& budget = Budget{});
BettiTable betti_table(const MonomialIdeal& squarefree, Field field = Field::gf2,
                       const Budget& budget = Budget{});

/// Every union of a nonempty set of masks, ascending.
std::vector<Mask> union_closure(const std::vector<Mask>& masks);

struct RegularityResult {
  std::size_t power = 1;
  std::size_t generators = 0;
  std::size_t polarized_variables = 0;
  BettiTable betti;

  int reg_ideal() const { return betti.reg_ideal(); }
  int reg_quotient() const { return betti.reg_quotient(); }
};

/// Betti table of any monomial ideal through its polarization.
RegularityResult regularity(const MonomialIdeal& ideal, const BettiOptions& options, const Budget& budget = Budget{});

/// reg(I(G)^s) via polarize(ideal_power(edge_ideal(G), s)).
RegularityResult regularity_of_power(const Graph& g, std::size_t s, Field field = Field::gf2,
                                     const Budget& budget = Budget{});

/// Polarized variable count of I(G)^s, without computing any homology.
std::size_t polarized_variable_count(const Graph& g, std::size_t s, const Budget& budget = Budget{});

}  // namespace eil
