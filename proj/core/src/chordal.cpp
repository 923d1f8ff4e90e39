#include "eil/chordal.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <unordered_map>

#include "eil/matching.hpp"

namespace eil {

namespace {

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (!found || weight[v] > weight[pick]) {
        pick = v;
        found = true;
      }
    }
    numbered[pick] = true;
    visit.push_back(pick);
    g.neighbors(pick).for_each([&](Vertex u) {
      if (!numbered[u]) ++weight[u];
    });
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

// Shortest path from a to b avoiding `blocked`; empty if none.
std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b, const VertexSet& blocked) {
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n, static_cast<Vertex>(-1));
  std::deque<Vertex> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == b) break;
    g.neighbors(x).for_each([&](Vertex y) {
      if (parent[y] == static_cast<Vertex>(-1) && !blocked.contains(y)) {
        parent[y] = x;
        queue.push_back(y);
      }
    });
  }
  if (parent[b] == static_cast<Vertex>(-1)) return {};
  std::vector<Vertex> path;
  for (Vertex x = b; x != a; x = parent[x]) path.push_back(x);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

// v with nonadjacent neighbors a, b joined by a path outside N[v] gives a
// chordless cycle; a non-chordal graph always has such a triple.
std::vector<Vertex> find_induced_cycle(const Graph& g, Vertex hint) {
  const std::size_t n = g.order();
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex v = static_cast<Vertex>((hint + k) % n);
    const auto nbrs = g.neighbors(v).members();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Vertex a = nbrs[i];
        const Vertex b = nbrs[j];
        if (g.adjacent(a, b)) continue;
        VertexSet blocked = g.closed_neighborhood(v);
        blocked.erase(a);
        blocked.erase(b);
        auto path = shortest_path(g, a, b, blocked);
        if (path.empty()) continue;
        std::vector<Vertex> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : bit(static_cast<Vertex>(n)) - 1; }

}  // namespace

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.order();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) return false;
    pos[order[i]] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    VertexSet later(n);
    g.neighbors(v).for_each([&](Vertex u) {
      if (pos[u] > i) later.insert(u);
    });
    if (later.empty()) continue;
    Vertex first = 0;
    std::size_t best = n;
    later.for_each([&](Vertex u) {
      if (pos[u] < best) {
        best = pos[u];
        first = u;
      }
    });
    VertexSet rest = later;
    rest.erase(first);
    if (!rest.is_subset_of(g.neighbors(first))) return false;
  }
  return true;
}

ChordalityCertificate check_chordal(const Graph& g) {
  ChordalityCertificate cert;
  auto order = maximum_cardinality_search(g);
  if (is_perfect_elimination_ordering(g, order)) {
    cert.chordal = true;
    cert.elimination_order = std::move(order);
    return cert;
  }
  cert.induced_cycle = find_induced_cycle(g, order.empty() ? 0 : order.front());
  if (cert.induced_cycle.size() < 4) {
    throw ConsistencyError("check_chordal: ordering failed but no chordless cycle was found");
  }
  return cert;
}

bool is_chordal(const Graph& g) { return is_perfect_elimination_ordering(g, maximum_cardinality_search(g)); }

std::vector<Vertex> simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_clique(g, g.neighbors(v))) out.push_back(v);
  }
  return out;
}

bool is_cochordal(const Graph& g) { return is_chordal(complement(g)); }

InducedSubgraph edge_subgraph(const Graph& host, const std::vector<Edge>& edges) {
  VertexSet ends(host.order());
  for (const Edge& e : edges) {
    if (e.v >= host.order() || !host.adjacent(e.u, e.v)) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the host");
    }
    ends.insert(e.u);
    ends.insert(e.v);
  }
  const auto ids = ends.members();
  std::vector<Vertex> local(host.order(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<Vertex>(i);
  std::vector<Edge> mapped;
  for (const Edge& e : edges) mapped.emplace_back(local[e.u], local[e.v]);
  InducedSubgraph out;
  out.graph = Graph::from_edges(ids.size(), mapped);
  out.host_ids = ids;
  return out;
}

void validate_cover(const Graph& host, const CochordalCover& cover) {
  std::vector<Edge> covered;
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    const auto sub = edge_subgraph(host, cover.parts[i]);
    if (!is_cochordal(sub.graph)) throw InputError("cover part " + std::to_string(i) + " is not co-chordal");
    covered.insert(covered.end(), cover.parts[i].begin(), cover.parts[i].end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (covered != host.edges()) throw InputError("cover parts do not cover every edge of the host");
}

bool is_valid_cover(const Graph& host, const CochordalCover& cover) {
  try {
    validate_cover(host, cover);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

namespace {

class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : n_(g.order()), edges_(g.edges()), id_(n_ * n_, -1) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      id_[edges_[i].u * n_ + edges_[i].v] = static_cast<int>(i);
      id_[edges_[i].v * n_ + edges_[i].u] = static_cast<int>(i);
    }
  }
  int id(Vertex u, Vertex v) const { return id_[u * n_ + v]; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<int> id_;
};

void keep_maximal(std::vector<Mask>& sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> kept;
  for (Mask s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](Mask k) { return (s & ~k) == 0; });
    if (!dominated) kept.push_back(s);
  }
  sets = std::move(kept);
}

// Exact minimum set cover of `universe` by `family` (edge masks).
class SetCover {
 public:
  SetCover(Mask universe, std::vector<Mask> family) : universe_(universe), family_(std::move(family)) {
    for (Vertex e = 0; e < 64; ++e) {
      if ((universe_ & bit(e)) == 0) continue;
      for (std::size_t i = 0; i < family_.size(); ++i) {
        if ((family_[i] & bit(e)) != 0) containing_[e].push_back(i);
      }
    }
  }

  std::vector<std::size_t> solve() {
    best_ = greedy();
    std::vector<std::size_t> chosen;
    search(0, chosen);
    return best_;
  }

 private:
  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> picks;
    Mask covered = 0;
    while (covered != universe_) {
      std::size_t pick = 0;
      int gain = -1;
      for (std::size_t i = 0; i < family_.size(); ++i) {
        const int g = popcount(family_[i] & ~covered);
        if (g > gain) {
          gain = g;
          pick = i;
        }
      }
      if (gain <= 0) throw ConsistencyError("cochord: candidate parts do not cover the edge set");
      picks.push_back(pick);
      covered |= family_[pick];
    }
    return picks;
  }

  // Pairwise "no common part" edges need distinct parts.
  std::size_t lower_bound(Mask uncovered) const {
    std::size_t bound = 0;
    Mask blocked = 0;
    for_each_bit(uncovered, [&](Vertex e) {
      if ((blocked & bit(e)) != 0) return;
      ++bound;
      for (std::size_t i : containing_[e]) blocked |= family_[i];
    });
    return bound;
  }

  void search(Mask covered, std::vector<std::size_t>& chosen) {
    const Mask uncovered = universe_ & ~covered;
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + lower_bound(uncovered) >= best_.size()) return;
    Vertex pivot = 0;
    std::size_t fewest = family_.size() + 1;
    for_each_bit(uncovered, [&](Vertex e) {
      if (containing_[e].size() < fewest) {
        fewest = containing_[e].size();
        pivot = e;
      }
    });
    auto options = containing_[pivot];
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return popcount(family_[a] & uncovered) > popcount(family_[b] & uncovered);
    });
    for (std::size_t i : options) {
      chosen.push_back(i);
      search(covered | family_[i], chosen);
      chosen.pop_back();
    }
  }

  Mask universe_;
  std::vector<Mask> family_;
  std::array<std::vector<std::size_t>, 64> containing_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<Mask> maximal_cochordal_parts(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "cochord_number");
  budget.require_edges(g.num_edges(), "cochord_number");
  const std::size_t n = g.order();
  const EdgeIndex index(g);
  if (index.edges().empty()) return {};
  const auto adj = g.adjacency_masks();
  std::vector<Mask> co(n);
  for (Vertex v = 0; v < n; ++v) co[v] = all_vertices(n) & ~adj[v] & ~bit(v);

  // Eliminating u after the set S keeps exactly the G-edges uv (v not yet
  // eliminated) such that u and v are not joined in the complement by a path
  // whose interior lies in S; the kept edges form a co-chordal part, and
  // every maximal co-chordal part arises from some elimination order.
  std::unordered_map<Mask, std::vector<Mask>> layer{{Mask{0}, {Mask{0}}}};
  for (std::size_t k = 0; k < n; ++k) {
    std::unordered_map<Mask, std::vector<Mask>> next;
    for (const auto& [eliminated, partials] : layer) {
      // Components of the complement restricted to `eliminated`.
      std::vector<std::pair<Mask, Mask>> comps;  // (component, its complement-neighborhood)
      Mask left = eliminated;
      while (left != 0) {
        Mask comp = bit(lowest(left));
        Mask frontier = comp;
        while (frontier != 0) {
          Mask grow = 0;
          for_each_bit(frontier, [&](Vertex x) { grow |= co[x] & eliminated; });
          frontier = grow & ~comp;
          comp |= grow;
        }
        Mask reach = 0;
        for_each_bit(comp, [&](Vertex x) { reach |= co[x]; });
        comps.emplace_back(comp, reach);
        left &= ~comp;
      }
      for_each_bit(all_vertices(n) & ~eliminated, [&](Vertex u) {
        Mask reach = co[u];
        for (const auto& [comp, nb] : comps) {
          if ((comp & co[u]) != 0) reach |= nb;
        }
        Mask kept_edges = 0;
        for_each_bit(adj[u] & ~eliminated & ~reach, [&](Vertex v) {
          kept_edges |= bit(static_cast<Vertex>(index.id(u, v)));
        });
        auto& bucket = next[eliminated | bit(u)];
        for (Mask p : partials) bucket.push_back(p | kept_edges);
      });
    }
    // A partial set dominated by another with the same eliminated set can
    // never end up maximal.
    for (auto& [key, sets] : next) keep_maximal(sets);
    layer = std::move(next);
  }
  auto family = layer.begin()->second;
  keep_maximal(family);
  std::sort(family.begin(), family.end());
  return family;
}

CochordResult cochord_number(const Graph& g, const Budget& budget) {
  CochordResult result;
  if (g.num_edges() == 0) return result;
  const auto family = maximal_cochordal_parts(g, budget);
  const auto edges = g.edges();
  const Mask universe = edges.size() == 64 ? ~Mask{0} : bit(static_cast<Vertex>(edges.size())) - 1;
  auto picks = SetCover(universe, family).solve();
  std::sort(picks.begin(), picks.end());
  result.value = picks.size();
  for (std::size_t i : picks) {
    std::vector<Edge> part;
    for_each_bit(family[i], [&](Vertex e) { part.push_back(edges[e]); });
    result.witness.parts.push_back(std::move(part));
  }
  return result;
}

CochordLemmaWitness lemma_cochord_witness(const Graph& g, const CochordalCover& cover) {
  if (g.num_edges() == 0) throw PreconditionError("lemma_cochord_witness: graph has no edge");
  validate_cover(g, cover);
  CochordalCover parts;
  for (const auto& p : cover.parts) {
    if (!p.empty()) parts.parts.push_back(p);
  }
  const auto first = edge_subgraph(g, parts.parts.front());
  const auto cert = check_chordal(complement(first.graph));
  if (!cert.chordal) throw ConsistencyError("lemma_cochord_witness: first part is not co-chordal");
  // The first vertex of a perfect elimination ordering is simplicial.
  CochordLemmaWitness out;
  out.w = first.host_ids[cert.elimination_order.front()];
  out.remainder = delete_closed_neighborhood(g, out.w);

  const VertexSet gone = g.closed_neighborhood(out.w);
  std::vector<Vertex> local(g.order(), 0);
  for (std::size_t i = 0; i < out.remainder.host_ids.size(); ++i) {
    local[out.remainder.host_ids[i]] = static_cast<Vertex>(i);
  }
  for (std::size_t i = 1; i < parts.parts.size(); ++i) {
    std::vector<Edge> kept;
    for (const Edge& e : parts.parts[i]) {
      if (!gone.contains(e.u) && !gone.contains(e.v)) kept.emplace_back(local[e.u], local[e.v]);
    }
    if (!kept.empty()) out.cover.parts.push_back(std::move(kept));
  }
  try {
    validate_cover(out.remainder.graph, out.cover);
  } catch (const InputError& e) {
    throw ConsistencyError(std::string("lemma_cochord_witness: restricted cover invalid: ") + e.what());
  }
  if (out.cover.size() + 1 > parts.size()) {
    throw ConsistencyError("lemma_cochord_witness: restricted cover did not shrink");
  }
  return out;
}

}  // namespace eil
