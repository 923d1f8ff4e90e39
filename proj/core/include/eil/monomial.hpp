#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eil/error.hpp"
#include "eil/graph.hpp"

namespace eil {

using Variable = std::uint32_t;

/// Sparse exponent vector: (variable, exponent) pairs sorted by variable,
/// every exponent >= 1.
class Monomial {
 public:
  using Term = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  /// Zero exponents are dropped, repeated variables are merged.
  explicit Monomial(std::vector<Term> terms);
  static Monomial product_of(Variable a, Variable b);

  const std::vector<Term>& terms() const { return terms_; }
  std::uint32_t exponent(Variable x) const;
  std::size_t degree() const;
  bool is_one() const { return terms_.empty(); }
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  /// Variables with positive exponent. Requires every variable < 64.
  Mask support_mask() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// Monomial ideal given by its minimal generators, sorted by (degree, terms).
struct MonomialIdeal {
  std::vector<std::string> variables;
  std::vector<Monomial> generators;

  std::size_t num_variables() const { return variables.size(); }
  bool is_zero() const { return generators.empty(); }
  bool is_squarefree() const;
  /// Largest exponent of each variable over the generators.
  std::vector<std::uint32_t> max_exponents() const;
  /// True iff some generator divides m.
  bool contains(const Monomial& m) const;
};

/// Drops duplicates and every monomial divisible by another, then sorts.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

/// Variables x0..x{n-1}, one generator x_u x_v per edge.
MonomialIdeal edge_ideal(const Graph& g);

/// I^s computed as I^{s-1} * I with divisibility reduction after every step.
/// Throws InputError for s == 0 and ResourceError when an intermediate
/// generator set exceeds budget.generators.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::size_t s, const Budget& budget = Budget{});

struct Polarization {
  MonomialIdeal ideal;
  /// For each new variable: (original variable, copy index starting at 1).
  std::vector<std::pair<Variable, std::uint32_t>> origin;
};

/// x^e becomes x_1 * ... * x_e in fresh variables; variables that never occur
/// in a generator are dropped.
Polarization polarize(const MonomialIdeal& ideal);

std::string to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace eil
