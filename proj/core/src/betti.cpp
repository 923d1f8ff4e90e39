#include "eil/betti.hpp"

#include <algorithm>
#include <unordered_set>

namespace eil {

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::reg_quotient() const {
  int r = 0;
  for (const auto& [ij, b] : entries) r = std::max(r, ij.second - ij.first);
  return r;
}

int BettiTable::reg_ideal() const {
  int r = 0;
  for (const auto& [ij, b] : entries) {
    if (ij.first >= 1) r = std::max(r, ij.second - ij.first + 1);
  }
  return r;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [ij, b] : entries) p = std::max(p, ij.first);
  return p;
}

std::vector<Mask> union_closure(const std::vector<Mask>& masks) {
  std::unordered_set<Mask> seen;
  std::vector<Mask> out;
  for (Mask g : masks) {
    const std::size_t before = out.size();
    if (seen.insert(g).second) out.push_back(g);
    for (std::size_t i = 0; i < before; ++i) {
      const Mask u = out[i] | g;
      if (seen.insert(u).second) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BettiTable betti_table(const MonomialIdeal& squarefree, const BettiOptions& options, const Budget& budget) {
  budget.require_subset(squarefree.num_variables(), "betti_table");
  const SimplicialComplex cx = stanley_reisner(squarefree);
  BettiTable table;
  table.field = options.field;
  table.entries[{0, 0}] = 1;

  std::vector<Mask> supports;
  for (const Monomial& m : squarefree.generators) supports.push_back(m.support_mask());
  for (Mask w : union_closure(supports)) {
    const int size = popcount(w);
    const auto homology = reduced_homology_dims(cx, w, options.field, budget);
    std::int64_t alternating = 0;
    for (const auto& [d, h] : homology) {
      table.entries[{size - d - 1, size}] += h;
      alternating += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h);
    }
    if (options.check_euler && alternating != reduced_euler_characteristic(cx, w, budget)) {
      throw ConsistencyError("betti_table: homology and face count disagree on a subcomplex");
    }
  }
  return table;
}

BettiTable betti_table(const MonomialIdeal& squarefree, Field field, const Budget& budget) {
  return betti_table(squarefree, BettiOptions{field, false}, budget);
}

RegularityResult regularity(const MonomialIdeal& ideal, const BettiOptions& options, const Budget& budget) {
  RegularityResult r;
  r.generators = ideal.generators.size();
  const Polarization p = polarize(ideal);
  r.polarized_variables = p.ideal.num_variables();
  if (r.polarized_variables > budget.subset || r.polarized_variables > 64) {
    throw ResourceError("regularity: polarized ideal has " + std::to_string(r.polarized_variables) +
                        " variables, subset budget is " + std::to_string(budget.subset));
  }
  r.betti = betti_table(p.ideal, options, budget);
  return r;
}

RegularityResult regularity_of_power(const Graph& g, std::size_t s, Field field, const Budget& budget) {
  RegularityResult r = regularity(ideal_power(edge_ideal(g), s, budget), BettiOptions{field, false}, budget);
  r.power = s;
  return r;
}

std::size_t polarized_variable_count(const Graph& g, std::size_t s, const Budget& budget) {
  const auto maxe = ideal_power(edge_ideal(g), s, budget).max_exponents();
  std::size_t total = 0;
  for (auto e : maxe) total += e;
  return total;
}

}  // namespace eil
