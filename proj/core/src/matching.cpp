#include "eil/matching.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace eil {

namespace {

Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : bit(static_cast<Vertex>(n)) - 1; }

Mask neighborhood(std::span<const Mask> adj, Mask set) {
  Mask out = 0;
  for_each_bit(set, [&](Vertex v) { out |= adj[v]; });
  return out;
}

/// Vertices of `set` with at least one neighbor inside `set`.
Mask non_isolated(std::span<const Mask> adj, Mask set) {
  Mask out = 0;
  for_each_bit(set, [&](Vertex v) {
    if ((adj[v] & set) != 0) out |= bit(v);
  });
  return out;
}

// Cycles grouped by their smallest vertex, so searches that always branch on
// the lowest live vertex only look at cycles that can contain it.
struct CycleIndex {
  std::vector<std::vector<FiveCycle>> through;

  CycleIndex(std::size_t n, const std::vector<FiveCycle>& cycles, bool induced_only) : through(n) {
    for (const auto& c : cycles) {
      if (induced_only && !c.induced) continue;
      for_each_bit(c.vertices, [&](Vertex v) { through[v].push_back(c); });
    }
  }
};

// ---------------------------------------------------------- matching number

class MaxMatching {
 public:
  explicit MaxMatching(std::span<const Mask> adj) : adj_(adj) {}

  int value(Mask live) {
    live = non_isolated(adj_, live);
    if (live == 0) return 0;
    if (auto it = memo_.find(live); it != memo_.end()) return it->second;
    const Vertex v = lowest(live);
    int best = value(live & ~bit(v));
    for_each_bit(adj_[v] & live, [&](Vertex u) {
      best = std::max(best, 1 + value(live & ~bit(v) & ~bit(u)));
    });
    memo_.emplace(live, best);
    return best;
  }

  void witness(Mask live, std::vector<Edge>& out) {
    live = non_isolated(adj_, live);
    if (live == 0) return;
    const int target = value(live);
    const Vertex v = lowest(live);
    for (Mask m = adj_[v] & live; m != 0; m &= m - 1) {
      const Vertex u = lowest(m);
      const Mask rest = live & ~bit(v) & ~bit(u);
      if (1 + value(rest) == target) {
        out.emplace_back(v, u);
        witness(rest, out);
        return;
      }
    }
    witness(live & ~bit(v), out);
  }

 private:
  std::span<const Mask> adj_;
  std::unordered_map<Mask, int> memo_;
};

// ---------------------------------------------- minimum maximal matching

// `free` = vertices not yet covered. A matching is maximal once `free` is
// independent; every edge inside `free` forces one endpoint to be matched.
class MinMaximalMatching {
 public:
  explicit MinMaximalMatching(std::span<const Mask> adj) : adj_(adj) {}

  int value(Mask free) {
    const Mask active = non_isolated(adj_, free);
    if (active == 0) return 0;
    if (auto it = memo_.find(active); it != memo_.end()) return it->second;
    int best = std::numeric_limits<int>::max();
    for_each_option(active, [&](Mask used) { best = std::min(best, 1 + value(active & ~used)); });
    memo_.emplace(active, best);
    return best;
  }

  void witness(Mask free, std::vector<Edge>& out) {
    const Mask active = non_isolated(adj_, free);
    if (active == 0) return;
    const int target = value(active);
    bool done = false;
    for_each_option(active, [&](Mask used) {
      if (done || 1 + value(active & ~used) != target) return;
      done = true;
      out.emplace_back(lowest(used), lowest(used & (used - 1)));
      witness(active & ~used, out);
    });
  }

 private:
  template <class F>
  void for_each_option(Mask active, F&& f) {
    const Vertex u = lowest(active);
    const Vertex v = lowest(adj_[u] & active);
    for_each_bit(adj_[u] & active, [&](Vertex w) { f(bit(u) | bit(w)); });
    for_each_bit(adj_[v] & active & ~bit(u), [&](Vertex w) { f(bit(v) | bit(w)); });
  }

  std::span<const Mask> adj_;
  std::unordered_map<Mask, int> memo_;
};

// ------------------------------------------- induced {K2} / {K2,C5} packing

// `live` = vertices that may still join the subgraph: neither chosen nor
// adjacent to a chosen vertex.
class InducedPacking {
 public:
  InducedPacking(std::span<const Mask> adj, const CycleIndex* cycles) : adj_(adj), cycles_(cycles) {}

  int value(Mask live) {
    live = non_isolated(adj_, live);
    if (live == 0) return 0;
    if (auto it = memo_.find(live); it != memo_.end()) return it->second;
    int best = 0;
    for_each_option(live, [&](Mask rest, int gain, const auto&) { best = std::max(best, gain + value(rest)); });
    memo_.emplace(live, best);
    return best;
  }

  void witness(Mask live, HSubgraph& out) {
    live = non_isolated(adj_, live);
    if (live == 0) return;
    const int target = value(live);
    bool done = false;
    for_each_option(live, [&](Mask rest, int gain, const auto& component) {
      if (done || gain + value(rest) != target) return;
      done = true;
      component(out);
      witness(rest, out);
    });
  }

 private:
  // Options in witness-preference order: K2 through the lowest live vertex
  // (by partner), then C5 through it (lexicographic), then skipping it.
  template <class F>
  void for_each_option(Mask live, F&& f) {
    const Vertex v = lowest(live);
    for_each_bit(adj_[v] & live, [&](Vertex u) {
      const Mask rest = live & ~(adj_[v] | adj_[u] | bit(v) | bit(u));
      f(rest, 1, [v, u](HSubgraph& h) { h.k2.emplace_back(v, u); });
    });
    if (cycles_ != nullptr) {
      for (const FiveCycle& c : cycles_->through[v]) {
        if ((c.vertices & ~live) != 0) continue;
        const Mask rest = live & ~(neighborhood(adj_, c.vertices) | c.vertices);
        f(rest, 2, [&c](HSubgraph& h) { h.c5.push_back(c.seq); });
      }
    }
    f(live & ~bit(v), 0, [](HSubgraph&) {});
  }

  std::span<const Mask> adj_;
  const CycleIndex* cycles_;
  std::unordered_map<Mask, int> memo_;
};

// ---------------------------------------------- maximal {K2,C5}-subgraphs

class MaximalHPacking {
 public:
  MaximalHPacking(std::span<const Mask> adj, const CycleIndex& cycles) : adj_(adj), cycles_(cycles) {}

  int value(Mask free) {
    const Mask active = non_isolated(adj_, free);
    if (active == 0) return 0;
    if (auto it = memo_.find(active); it != memo_.end()) return it->second;
    int best = std::numeric_limits<int>::max();
    for_each_option(active, [&](Mask used, int cost, const auto&) { best = std::min(best, cost + value(active & ~used)); });
    memo_.emplace(active, best);
    return best;
  }

  void witness(Mask free, HSubgraph& out) {
    const Mask active = non_isolated(adj_, free);
    if (active == 0) return;
    const int target = value(active);
    bool done = false;
    for_each_option(active, [&](Mask used, int cost, const auto& component) {
      if (done || cost + value(active & ~used) != target) return;
      done = true;
      component(out);
      witness(active & ~used, out);
    });
  }

 private:
  // The lowest edge uv inside `active` must meet V(H): branch on u joining
  // a K2 or a C5, then v doing so without u.
  template <class F>
  void for_each_option(Mask active, F&& f) {
    const Vertex u = lowest(active);
    const Vertex v = lowest(adj_[u] & active);
    for (const Vertex x : {u, v}) {
      const Mask excluded = x == v ? bit(u) : 0;
      for_each_bit(adj_[x] & active & ~excluded, [&](Vertex w) {
        f(bit(x) | bit(w), 1, [x, w](HSubgraph& h) { h.k2.emplace_back(x, w); });
      });
      for (const FiveCycle& c : cycles_.through[x]) {
        if ((c.vertices & ~active) != 0 || (c.vertices & excluded) != 0) continue;
        f(c.vertices, 2, [&c](HSubgraph& h) { h.c5.push_back(c.seq); });
      }
    }
  }

  std::span<const Mask> adj_;
  const CycleIndex& cycles_;
  std::unordered_map<Mask, int> memo_;
};

}  // namespace

std::vector<FiveCycle> five_cycles(const Graph& g) {
  if (g.order() > 64) throw ResourceError("five_cycles: graphs above 64 vertices are not supported");
  const auto adj = g.adjacency_masks();
  std::vector<FiveCycle> out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a) {
    const Mask above = ~((bit(a) << 1) - 1);
    for_each_bit(adj[a] & above, [&](Vertex b) {
      for_each_bit(adj[b] & above & ~bit(a), [&](Vertex c) {
        for_each_bit(adj[c] & above & ~bit(b), [&](Vertex d) {
          // e closes the cycle back to a; b < e fixes the orientation.
          for_each_bit(adj[d] & adj[a] & above & ~bit(b) & ~bit(c), [&](Vertex e) {
            if (e <= b) return;
            FiveCycle cyc;
            cyc.seq = {a, b, c, d, e};
            cyc.vertices = bit(a) | bit(b) | bit(c) | bit(d) | bit(e);
            int inner = 0;
            for (Vertex x : cyc.seq) inner += popcount(adj[x] & cyc.vertices);
            cyc.induced = inner == 10;
            out.push_back(cyc);
          });
        });
      });
    });
  }
  std::sort(out.begin(), out.end(), [](const FiveCycle& x, const FiveCycle& y) { return x.seq < y.seq; });
  return out;
}

VertexSet HSubgraph::vertices(std::size_t host_order) const {
  VertexSet s(host_order);
  for (const Edge& e : k2) {
    s.insert(e.u);
    s.insert(e.v);
  }
  for (const auto& c : c5) {
    for (Vertex v : c) s.insert(v);
  }
  return s;
}

void validate_h_subgraph(const Graph& host, const HSubgraph& h, bool require_induced) {
  VertexSet seen(host.order());
  auto claim = [&](Vertex v) {
    if (v >= host.order()) throw InputError("H-subgraph vertex " + std::to_string(v) + " not in host");
    if (seen.contains(v)) throw InputError("H-subgraph components share vertex " + std::to_string(v));
    seen.insert(v);
  };
  for (const Edge& e : h.k2) {
    claim(e.u);
    claim(e.v);
    if (!host.adjacent(e.u, e.v)) throw InputError("K2 component is not an edge of the host");
  }
  for (const auto& c : h.c5) {
    for (Vertex v : c) claim(v);
    for (std::size_t i = 0; i < 5; ++i) {
      if (!host.adjacent(c[i], c[(i + 1) % 5])) throw InputError("C5 component is not a cycle of the host");
    }
  }
  if (require_induced) {
    // Exactly the component edges may appear inside V(H).
    const VertexSet vs = seen;
    std::size_t inner = 0;
    vs.for_each([&](Vertex v) { inner += (host.neighbors(v) & vs).size(); });
    if (inner / 2 != h.k2.size() + 5 * h.c5.size()) throw InputError("H-subgraph is not induced in the host");
  }
}

bool is_matching(const Graph& host, const Matching& m) {
  VertexSet seen(host.order());
  for (const Edge& e : m.edges) {
    if (e.v >= host.order() || !host.adjacent(e.u, e.v)) return false;
    if (seen.contains(e.u) || seen.contains(e.v)) return false;
    seen.insert(e.u);
    seen.insert(e.v);
  }
  return true;
}

bool is_maximal_matching(const Graph& host, const Matching& m) {
  if (!is_matching(host, m)) return false;
  VertexSet covered(host.order());
  for (const Edge& e : m.edges) {
    covered.insert(e.u);
    covered.insert(e.v);
  }
  for (const Edge& e : host.edges()) {
    if (!covered.contains(e.u) && !covered.contains(e.v)) return false;
  }
  return true;
}

bool is_induced_matching(const Graph& host, const Matching& m) {
  if (!is_matching(host, m)) return false;
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < m.edges.size(); ++j) {
      const Edge& a = m.edges[i];
      const Edge& b = m.edges[j];
      if (host.adjacent(a.u, b.u) || host.adjacent(a.u, b.v) || host.adjacent(a.v, b.u) ||
          host.adjacent(a.v, b.v)) {
        return false;
      }
    }
  }
  return true;
}

std::size_t matching_number(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "matching_number");
  const auto adj = g.adjacency_masks();
  return static_cast<std::size_t>(MaxMatching(adj).value(all_vertices(g.order())));
}

Matching maximum_matching(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "maximum_matching");
  const auto adj = g.adjacency_masks();
  Matching m;
  MaxMatching(adj).witness(all_vertices(g.order()), m.edges);
  return m;
}

std::size_t min_maximal_matching_number(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "min_maximal_matching_number");
  const auto adj = g.adjacency_masks();
  return static_cast<std::size_t>(MinMaximalMatching(adj).value(all_vertices(g.order())));
}

Matching minimum_maximal_matching(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "minimum_maximal_matching");
  const auto adj = g.adjacency_masks();
  Matching m;
  MinMaximalMatching(adj).witness(all_vertices(g.order()), m.edges);
  return m;
}

std::size_t induced_matching_number(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "induced_matching_number");
  const auto adj = g.adjacency_masks();
  return static_cast<std::size_t>(InducedPacking(adj, nullptr).value(all_vertices(g.order())));
}

Matching maximum_induced_matching(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "maximum_induced_matching");
  const auto adj = g.adjacency_masks();
  HSubgraph h;
  InducedPacking(adj, nullptr).witness(all_vertices(g.order()), h);
  return Matching{h.k2};
}

bool has_gap(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexSet touch = g.closed_neighborhood(edges[i].u) | g.closed_neighborhood(edges[i].v);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!touch.contains(edges[j].u) && !touch.contains(edges[j].v)) return true;
    }
  }
  return false;
}

bool is_maximal_h_subgraph(const Graph& host, const HSubgraph& h) {
  validate_h_subgraph(host, h);
  const VertexSet rest = host.vertices() - h.vertices(host.order());
  bool edgeless = true;
  rest.for_each([&](Vertex v) {
    if (host.neighbors(v).intersects(rest)) edgeless = false;
  });
  return edgeless;
}

HMatchResult ind_match_k2c5(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "ind_match_k2c5");
  const auto adj = g.adjacency_masks();
  const CycleIndex cycles(g.order(), five_cycles(g), /*induced_only=*/true);
  InducedPacking search(adj, &cycles);
  HMatchResult r;
  r.value = static_cast<std::size_t>(search.value(all_vertices(g.order())));
  search.witness(all_vertices(g.order()), r.witness);
  return r;
}

HMatchResult min_match_k2c5(const Graph& g, CycleMode mode, const Budget& budget) {
  budget.require_vertices(g.order(), "min_match_k2c5");
  const auto adj = g.adjacency_masks();
  const CycleIndex cycles(g.order(), five_cycles(g), mode == CycleMode::induced_only);
  MaximalHPacking search(adj, cycles);
  HMatchResult r;
  r.value = static_cast<std::size_t>(search.value(all_vertices(g.order())));
  search.witness(all_vertices(g.order()), r.witness);
  return r;
}

}  // namespace eil
