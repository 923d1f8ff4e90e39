#include "eil/structure.hpp"

#include <algorithm>
#include <unordered_map>

namespace eil {

namespace {

Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : bit(static_cast<Vertex>(n)) - 1; }

bool bron_kerbosch(std::span<const Mask> adj, Mask chosen, Mask candidates, Mask excluded,
                   const std::function<bool(Mask)>& f) {
  if (candidates == 0 && excluded == 0) return f(chosen);
  // Pivot: the vertex leaving the fewest branches (G-neighbors of the pivot
  // plus the pivot itself must be tried).
  Mask branch = candidates;
  int fewest = 65;
  for_each_bit(candidates | excluded, [&](Vertex u) {
    const Mask b = candidates & (adj[u] | bit(u));
    if (popcount(b) < fewest) {
      fewest = popcount(b);
      branch = b;
    }
  });
  for (Mask m = branch; m != 0; m &= m - 1) {
    const Vertex v = lowest(m);
    const Mask keep = ~(adj[v] | bit(v));
    if (!bron_kerbosch(adj, chosen | bit(v), candidates & keep, excluded & keep, f)) return false;
    candidates &= ~bit(v);
    excluded |= bit(v);
  }
  return true;
}

class Decomposability {
 public:
  Decomposability(std::span<const Mask> adj, DecomposabilityRule rule) : adj_(adj), rule_(rule) {}

  bool decomposable(Mask live) {
    bool edgeless = true;
    for_each_bit(live, [&](Vertex v) {
      if ((adj_[v] & live) != 0) edgeless = false;
    });
    if (edgeless) return true;
    if (auto it = memo_.find(live); it != memo_.end()) return it->second;
    bool result = false;
    for (Mask m = live; m != 0 && !result; m &= m - 1) {
      const Vertex v = lowest(m);
      const Mask closed = (adj_[v] | bit(v)) & live;
      if (!sheds(live, v)) continue;
      result = decomposable(live & ~bit(v)) && decomposable(live & ~closed);
    }
    memo_.emplace(live, result);
    return result;
  }

 private:
  bool sheds(Mask live, Vertex v) const {
    const Mask nbrs = adj_[v] & live;
    if (rule_ == DecomposabilityRule::literal) {
      // Each maximal independent set of G - v must already block v.
      return for_each_maximal_independent_set(adj_, live & ~bit(v), [&](Mask s) { return (s & nbrs) != 0; });
    }
    // A maximal independent set of G - N[v] that dominates N(v) is maximal
    // in G - v but extendable by v.
    return for_each_maximal_independent_set(adj_, live & ~nbrs & ~bit(v), [&](Mask s) {
      bool dominates = true;
      for_each_bit(nbrs, [&](Vertex w) {
        if ((adj_[w] & s) == 0) dominates = false;
      });
      return !dominates;
    });
  }

  std::span<const Mask> adj_;
  DecomposabilityRule rule_;
  std::unordered_map<Mask, bool> memo_;
};

}  // namespace

std::vector<Edge> pendant_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 1 || g.degree(e.v) == 1) out.push_back(e);
  }
  return out;
}

std::vector<FiveCycle> basic_five_cycles(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "basic_five_cycles");
  std::vector<FiveCycle> out;
  for (const FiveCycle& c : five_cycles(g)) {
    bool basic = true;
    for (std::size_t i = 0; i < 5 && basic; ++i) {
      for (std::size_t j = i + 1; j < 5 && basic; ++j) {
        const Vertex a = c.seq[i];
        const Vertex b = c.seq[j];
        if (g.adjacent(a, b) && g.degree(a) >= 3 && g.degree(b) >= 3) basic = false;
      }
    }
    if (basic) out.push_back(c);
  }
  return out;
}

PCResult pc_membership(const Graph& g, const Budget& budget) {
  PCResult r;
  const std::size_t n = g.order();
  const auto pendants = pendant_edges(g);
  const auto cycles = basic_five_cycles(g, budget);

  VertexSet p_set(n);
  PCDecomposition dec;
  for (const Edge& e : pendants) {
    if (p_set.contains(e.u) || p_set.contains(e.v)) {
      r.reason = "pendant edges are not pairwise disjoint";
      return r;
    }
    p_set.insert(e.u);
    p_set.insert(e.v);
    const bool u_leaf = g.degree(e.u) == 1;
    const bool v_leaf = g.degree(e.v) == 1;
    if (u_leaf && !v_leaf) {
      dec.pendant_pairs.emplace_back(e.v, e.u);
    } else {
      dec.pendant_pairs.emplace_back(e.u, e.v);
    }
  }
  VertexSet c_set(n);
  for (const FiveCycle& c : cycles) {
    for (Vertex v : c.seq) {
      if (c_set.contains(v)) {
        r.reason = "basic 5-cycles overlap";
        return r;
      }
      c_set.insert(v);
    }
    dec.basic_cycles.push_back(c.seq);
  }
  if (p_set.intersects(c_set)) {
    r.reason = "a pendant vertex lies on a basic 5-cycle";
    return r;
  }
  if ((p_set | c_set) != g.vertices()) {
    r.reason = "some vertex is neither pendant nor on a basic 5-cycle";
    return r;
  }
  r.member = true;
  r.witness = std::move(dec);
  return r;
}

bool for_each_maximal_independent_set(std::span<const Mask> adj, Mask allowed,
                                      const std::function<bool(Mask)>& f) {
  // Restrict adjacency to `allowed` implicitly: every mask below stays inside it.
  return bron_kerbosch(adj, 0, allowed, 0, f);
}

bool is_vertex_decomposable(const Graph& g, DecomposabilityRule rule, const Budget& budget) {
  budget.require_vertices(g.order(), "is_vertex_decomposable");
  const auto adj = g.adjacency_masks();
  return Decomposability(adj, rule).decomposable(all_vertices(g.order()));
}

bool is_well_covered(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "is_well_covered");
  const auto adj = g.adjacency_masks();
  int size = -1;
  return for_each_maximal_independent_set(adj, all_vertices(g.order()), [&](Mask s) {
    if (size < 0) size = popcount(s);
    return popcount(s) == size;
  });
}

bool is_cm_girth5(const Graph& g, bool cross_check, const Budget& budget) {
  if (g.order() == 0) throw PreconditionError("is_cm_girth5: the graph has no vertices");
  if (!is_connected(g)) throw PreconditionError("is_cm_girth5: graph is disconnected");
  if (!girth(g).at_least(5)) throw PreconditionError("is_cm_girth5: girth is below 5");
  const bool cm = g.order() == 1 || pc_membership(g, budget).member;
  if (cross_check &&
      (is_vertex_decomposable(g, DecomposabilityRule::literal, budget) && is_well_covered(g, budget)) != cm) {
    throw ConsistencyError("is_cm_girth5: class membership and vertex decomposability disagree");
  }
  return cm;
}

}  // namespace eil
