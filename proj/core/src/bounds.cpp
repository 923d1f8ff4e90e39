#include "eil/bounds.hpp"

#include <algorithm>

#include "eil/constructions.hpp"
#include "eil/graph_io.hpp"
#include "eil/structure.hpp"

namespace eil {

namespace {

template <class F>
void attempt(Invariants& inv, const char* what, F&& f) {
  try {
    f();
  } catch (const ResourceError& e) {
    inv.skipped.push_back(std::string(what) + ": " + e.what());
  }
}

long as_long(std::size_t v) { return static_cast<long>(v); }

struct CheckBuilder {
  std::optional<int> reg;
  std::string reg_note;
  long two_s = 0;

  Check make(std::string id, std::string statement, std::string relation) const {
    Check c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.relation = std::move(relation);
    if (reg) c.lhs = *reg;
    return c;
  }

  /// reg (relation) 2s + value + offset.
  Check compare(std::string id, std::string statement, std::string relation, std::optional<std::size_t> value,
                long offset) const {
    Check c = make(std::move(id), std::move(statement), std::move(relation));
    if (!value) {
      c.note = "over-budget: invariant not computed";
      return c;
    }
    c.rhs = two_s + as_long(*value) + offset;
    if (!reg) {
      c.note = reg_note;
      return c;
    }
    bool ok = false;
    if (c.relation == ">=") ok = *c.lhs >= *c.rhs;
    if (c.relation == "<=") ok = *c.lhs <= *c.rhs;
    if (c.relation == "=") ok = *c.lhs == *c.rhs;
    c.status = ok ? CheckStatus::holds : CheckStatus::violated;
    return c;
  }
};

Check not_applicable(Check c, std::string why) {
  c.status = CheckStatus::skipped;
  c.note = "not-applicable: " + std::move(why);
  return c;
}

}  // namespace

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds:
      return "holds";
    case CheckStatus::violated:
      return "violated";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

Invariants compute_invariants(const Graph& g, const Budget& budget) {
  Invariants inv;
  inv.order = g.order();
  inv.edges = g.num_edges();
  inv.girth = girth(g);
  attempt(inv, "match", [&] {
    inv.maximum_matching = maximum_matching(g, budget);
    inv.match = inv.maximum_matching->size();
  });
  attempt(inv, "min_match", [&] {
    inv.minimum_maximal_matching = minimum_maximal_matching(g, budget);
    inv.min_match = inv.minimum_maximal_matching->size();
  });
  attempt(inv, "ind_match", [&] {
    inv.maximum_induced_matching = maximum_induced_matching(g, budget);
    inv.ind_match = inv.maximum_induced_matching->size();
  });
  attempt(inv, "ind_match_k2c5", [&] {
    auto r = ind_match_k2c5(g, budget);
    inv.ind_match_k2c5 = r.value;
    inv.ind_match_k2c5_witness = std::move(r.witness);
  });
  attempt(inv, "min_match_k2c5", [&] {
    auto r = min_match_k2c5(g, CycleMode::allow_chords, budget);
    inv.min_match_k2c5 = r.value;
    inv.min_match_k2c5_witness = std::move(r.witness);
  });
  attempt(inv, "cochord", [&] {
    auto r = cochord_number(g, budget);
    inv.cochord = r.value;
    inv.cochord_witness = std::move(r.witness);
  });
  attempt(inv, "independence_number", [&] { inv.independence_number = independence_number(g, budget); });
  if (g.order() > 0 && inv.girth.at_least(5)) {
    attempt(inv, "is_cm_girth5", [&] {
      bool cm = true;
      for (const VertexSet& comp : connected_components(g)) {
        cm = cm && is_cm_girth5(induced_subgraph(g, comp).graph, false, budget);
      }
      inv.is_cm_girth5 = cm;
    });
  }
  return inv;
}

std::size_t BoundsReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == status; }));
}

const Check* BoundsReport::find(const std::string& id) const {
  for (const Check& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

BoundsReport evaluate_bounds(const Graph& g, std::size_t s, Field field, const Budget& budget, std::string name) {
  return evaluate_bounds(g, compute_invariants(g, budget), s, field, budget, std::move(name));
}

BoundsReport evaluate_bounds(const Graph& g, const Invariants& inv, std::size_t s, Field field,
                             const Budget& budget, std::string name) {
  if (s == 0) throw InputError("evaluate_bounds: s must be positive");
  BoundsReport r;
  r.name = std::move(name);
  r.graph6 = to_graph6(g);
  r.s = s;
  r.field = field;
  r.invariants = inv;

  CheckBuilder b;
  b.two_s = 2 * as_long(s);
  if (g.num_edges() == 0) {
    b.reg_note = "not-applicable: edgeless graph";
  } else {
    try {
      const RegularityResult reg = regularity_of_power(g, s, field, budget);
      r.reg_ideal = reg.reg_ideal();
      r.reg_quotient = reg.reg_quotient();
      r.polarized_variables = reg.polarized_variables;
      r.betti = reg.betti;
      b.reg = r.reg_ideal;
    } catch (const ResourceError& e) {
      b.reg_note = std::string("over-budget: ") + e.what();
    }
  }

  auto add = [&](Check c) {
    if (g.num_edges() == 0) c = not_applicable(std::move(c), "edgeless graph");
    r.checks.push_back(std::move(c));
  };

  add(b.compare("a", "reg >= 2s + ind-match - 1", ">=", inv.ind_match, -1));
  add(b.compare("b", "reg >= 2s + ind-match_{K2,C5} - 2", ">=", inv.ind_match_k2c5, -2));
  {
    Check c = b.compare("c", "reg >= 2s + ind-match_{K2,C5} - 1 when ind-match_{K2,C5} is odd", ">=",
                        inv.ind_match_k2c5, -1);
    if (inv.ind_match_k2c5 && *inv.ind_match_k2c5 % 2 == 0) c = not_applicable(std::move(c), "even");
    add(std::move(c));
  }
  add(b.compare("d", "reg <= 2s + cochord - 1", "<=", inv.cochord, -1));
  add(b.compare("e", "reg <= 2s + min-match_{K2,C5} - 1", "<=", inv.min_match_k2c5, -1));
  add(b.compare("f", "reg <= 2s + min-match - 1", "<=", inv.min_match, -1));
  {
    Check c = b.compare("g", "reg = 2s + ind-match - 1 when ind-match = min-match", "=", inv.ind_match, -1);
    if (!inv.ind_match || !inv.min_match) {
      c.status = CheckStatus::skipped;
      c.note = "over-budget: invariant not computed";
    } else if (*inv.ind_match != *inv.min_match) {
      c = not_applicable(std::move(c), "ind-match < min-match");
    }
    add(std::move(c));
  }
  {
    Check c;
    if (inv.ind_match_k2c5 && *inv.ind_match_k2c5 % 2 == 1) {
      c = b.compare("h", "Cohen-Macaulay, girth >= 5, odd: reg = 2s + ind-match_{K2,C5} - 1", "=",
                    inv.ind_match_k2c5, -1);
    } else {
      c = b.make("h", "Cohen-Macaulay, girth >= 5: reg in {2s + t - 2, 2s + t - 1}, t = ind-match_{K2,C5}",
                 "in");
      if (inv.ind_match_k2c5) {
        c.rhs = b.two_s + as_long(*inv.ind_match_k2c5) - 2;
        c.rhs_alt = *c.rhs + 1;
        if (b.reg) {
          c.status = (*c.lhs == *c.rhs || *c.lhs == *c.rhs_alt) ? CheckStatus::holds : CheckStatus::violated;
        } else {
          c.note = b.reg_note;
        }
      } else {
        c.note = "over-budget: invariant not computed";
      }
    }
    if (!inv.girth.at_least(5)) {
      c = not_applicable(std::move(c), "girth below 5");
    } else if (!inv.is_cm_girth5) {
      c.status = CheckStatus::skipped;
      c.note = "over-budget: Cohen-Macaulay test not computed";
    } else if (!*inv.is_cm_girth5) {
      c = not_applicable(std::move(c), "not Cohen-Macaulay");
    }
    add(std::move(c));
  }
  {
    // Every lower bound against every upper bound; needs no regularity.
    Check c;
    c.id = "bracket";
    c.statement = "largest lower bound <= smallest upper bound";
    c.relation = "<=";
    if (inv.ind_match && inv.ind_match_k2c5 && inv.cochord && inv.min_match_k2c5 && inv.min_match) {
      long low = std::max(b.two_s + as_long(*inv.ind_match) - 1, b.two_s + as_long(*inv.ind_match_k2c5) - 2);
      if (*inv.ind_match_k2c5 % 2 == 1) low = std::max(low, b.two_s + as_long(*inv.ind_match_k2c5) - 1);
      const long high = b.two_s - 1 + as_long(std::min({*inv.cochord, *inv.min_match_k2c5, *inv.min_match}));
      c.lhs = low;
      c.rhs = high;
      c.status = low <= high ? CheckStatus::holds : CheckStatus::violated;
    } else {
      c.note = "over-budget: invariant not computed";
    }
    add(std::move(c));
  }

  if (b.reg && inv.ind_match && inv.cochord) {
    r.strict_gap = b.two_s + as_long(*inv.ind_match) - 1 < *b.reg && *b.reg < b.two_s + as_long(*inv.cochord) - 1;
  }
  return r;
}

const char* invariant_name(HereditaryInvariant f) {
  switch (f) {
    case HereditaryInvariant::cochord:
      return "cochord";
    case HereditaryInvariant::min_match:
      return "minmatch";
    case HereditaryInvariant::min_match_k2c5:
      return "minmatch-k2c5";
  }
  return "?";
}

HereditaryInvariant parse_hereditary_invariant(std::string_view name) {
  if (name == "cochord") return HereditaryInvariant::cochord;
  if (name == "minmatch" || name == "min-match") return HereditaryInvariant::min_match;
  if (name == "minmatch-k2c5" || name == "min-match-k2c5") return HereditaryInvariant::min_match_k2c5;
  throw InputError("unknown invariant '" + std::string(name) + "' (expected cochord, minmatch or minmatch-k2c5)");
}

std::size_t hereditary_value(const Graph& g, HereditaryInvariant invariant, const Budget& budget) {
  switch (invariant) {
    case HereditaryInvariant::cochord:
      return cochord_number(g, budget).value + 1;
    case HereditaryInvariant::min_match:
      return min_maximal_matching_number(g, budget) + 1;
    case HereditaryInvariant::min_match_k2c5:
      return min_match_k2c5(g, CycleMode::allow_chords, budget).value + 1;
  }
  return 0;
}

WitnessRecord hereditary_witness_search(const Graph& g, HereditaryInvariant invariant, const Budget& budget) {
  if (g.num_edges() == 0) throw PreconditionError("hereditary_witness_search: graph has no edge");
  budget.require_vertices(g.order(), "hereditary_witness_search");
  WitnessRecord best;
  best.invariant = invariant;
  const std::size_t f = hereditary_value(g, invariant, budget);
  std::optional<WitnessRecord> lax;
  for (Vertex w = 0; w < g.order(); ++w) {
    WitnessRecord rec = best;
    rec.w = w;
    rec.f_g = f;
    rec.f_minus_w = hereditary_value(delete_vertex(g, w).graph, invariant, budget);
    rec.f_minus_closed = hereditary_value(delete_closed_neighborhood(g, w).graph, invariant, budget);
    if (rec.f_minus_w > f) continue;
    if (rec.f_minus_closed + 1 <= f) {
      rec.found = true;
      rec.strict = true;
      best = rec;
      break;
    }
    if (!lax && rec.f_minus_closed <= std::max<std::size_t>(f - 1, 2)) {
      rec.found = true;
      lax = rec;
    }
  }
  if (!best.found && lax) best = *lax;
  if (!best.found) best.f_g = f;

  if (invariant == HereditaryInvariant::cochord) {
    const CochordResult cover = cochord_number(g, budget);
    const CochordLemmaWitness lw = lemma_cochord_witness(g, cover.witness);
    best.constructed_w = lw.w;
    best.constructed_strict = hereditary_value(lw.remainder.graph, invariant, budget) + 1 <= f;
  }
  return best;
}

UnionCheck disjoint_union_lower_check(const Graph& a, const Graph& b, std::size_t s, Field field,
                                      const Budget& budget) {
  if (a.num_edges() == 0 || b.num_edges() == 0) {
    throw PreconditionError("disjoint_union_lower_check: both graphs need an edge");
  }
  UnionCheck out;
  out.reg_union_s = regularity_of_power(disjoint_union({a, b}), s, field, budget).reg_ideal();
  out.reg_a_s = regularity_of_power(a, s, field, budget).reg_ideal();
  out.reg_b = regularity_of_power(b, 1, field, budget).reg_ideal();
  out.holds = out.reg_union_s >= out.reg_a_s + out.reg_b - 1;
  return out;
}

}  // namespace eil
