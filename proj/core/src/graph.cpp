#include "eil/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>

#include "eil/error.hpp"

namespace eil {

// ---------------------------------------------------------------- Budget

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0 || value > 64) {
    throw InputError(std::string(name) + " must be an integer in [1, 64], got '" + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Budget Budget::from_environment() {
  Budget b;
  b.vertices = env_size("EIL_BUDGET_VERTICES", b.vertices);
  b.subset = env_size("EIL_BUDGET_SUBSET", b.subset);
  return b;
}

void Budget::require_vertices(std::size_t n, const char* what) const {
  if (n > vertices || n > 64) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n) +
                        " vertices exceeds the vertex budget of " + std::to_string(vertices));
  }
}

void Budget::require_subset(std::size_t n, const char* what) const {
  if (n > subset || n > 64) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n) +
                        " variables exceeds the subset budget of " + std::to_string(subset));
  }
}

void Budget::require_edges(std::size_t m, const char* what) const {
  if (m > edges || m > 64) {
    throw ResourceError(std::string(what) + ": " + std::to_string(m) +
                        " edges exceeds the edge budget of " + std::to_string(edges));
  }
}

// ------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~Mask{0};
  if (universe % 64 != 0) s.words_.back() = (Mask{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, Mask m) {
  if (universe > 64) throw ResourceError("VertexSet::from_mask: universe exceeds 64");
  VertexSet s(universe);
  if (universe < 64) m &= (Mask{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = m;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for a set over " +
                     std::to_string(universe_) + " vertices");
  }
  words_[v >> 6] |= Mask{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(Mask{1} << (v & 63));
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (Mask w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Mask w) { return w == 0; });
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t w = 0; w < words_.size() && w < o.words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= w < o.words_.size() ? o.words_[w] : 0;
  }
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t w = 0; w < words_.size() && w < o.words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const Mask other = w < o.words_.size() ? o.words_[w] : 0;
    if ((words_[w] & ~other) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t w = 0; w < words_.size() && w < o.words_.size(); ++w) {
    if ((words_[w] & o.words_[w]) != 0) return true;
  }
  return false;
}

std::optional<Vertex> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Mask VertexSet::to_mask() const {
  if (universe_ > 64) throw ResourceError("vertex set over more than 64 vertices has no mask form");
  return words_.empty() ? 0 : words_[0];
}

// ----------------------------------------------------------------- Graph

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InputError("loop edge at vertex " + std::to_string(e.u));
    if (e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (!g.adjacency_[e.u].contains(e.v)) {
      g.adjacency_[e.u].insert(e.v);
      g.adjacency_[e.v].insert(e.u);
      ++g.num_edges_;
    }
  }
  return g;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u) {
    adjacency_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order()) {
    throw InputError("label count " + std::to_string(labels.size()) + " does not match " +
                     std::to_string(order()) + " vertices");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::vector<Mask> Graph::adjacency_masks() const {
  std::vector<Mask> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = adjacency_[v].to_mask();
  return out;
}

// ------------------------------------------------------------ operations

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  Graph out = Graph::from_edges(n, edges);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v));
    out = out.with_labels(std::move(labels));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() > g.order()) {
    keep.for_each([&](Vertex v) {
      if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
    });
  }
  InducedSubgraph out;
  out.host_ids = keep.members();
  std::vector<Vertex> new_id(g.order(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < out.host_ids.size(); ++i) new_id[out.host_ids[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (Vertex hu : out.host_ids) {
    g.neighbors(hu).for_each([&](Vertex hv) {
      if (hu < hv && keep.contains(hv)) edges.emplace_back(new_id[hu], new_id[hv]);
    });
  }
  out.graph = Graph::from_edges(out.host_ids.size(), edges);
  std::vector<std::string> labels;
  labels.reserve(out.host_ids.size());
  for (Vertex hv : out.host_ids) labels.push_back(g.label(hv));
  out.graph = out.graph.with_labels(std::move(labels));
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop) {
  VertexSet keep = g.vertices();
  drop.for_each([&](Vertex v) {
    if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
    keep.erase(v);
  });
  return induced_subgraph(g, keep);
}

InducedSubgraph delete_vertex(const Graph& g, Vertex w) {
  if (w >= g.order()) throw InputError("vertex " + std::to_string(w) + " is not in the graph");
  VertexSet drop(g.order());
  drop.insert(w);
  return delete_vertices(g, drop);
}

InducedSubgraph delete_closed_neighborhood(const Graph& g, Vertex w) {
  if (w >= g.order()) throw InputError("vertex " + std::to_string(w) + " is not in the graph");
  return delete_vertices(g, g.closed_neighborhood(w));
}

Girth girth(const Graph& g) {
  // BFS from every root; a non-tree edge (a,b) closes a cycle of length
  // at most dist[a] + dist[b] + 1, and the minimum over roots is exact.
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex a = queue.front();
      queue.pop_front();
      if (2 * dist[a] + 1 >= best) break;
      g.neighbors(a).for_each([&](Vertex b) {
        if (dist[b] == std::numeric_limits<std::size_t>::max()) {
          dist[b] = dist[a] + 1;
          parent[b] = a;
          queue.push_back(b);
        } else if (parent[a] != b) {
          best = std::min(best, dist[a] + dist[b] + 1);
        }
      });
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return Girth{};
  return Girth{best};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> out;
  VertexSet seen(n);
  for (Vertex start = 0; start < n; ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp(n);
    std::vector<Vertex> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const Vertex a = stack.back();
      stack.pop_back();
      comp.insert(a);
      g.neighbors(a).for_each([&](Vertex b) {
        if (!seen.contains(b)) {
          seen.insert(b);
          stack.push_back(b);
        }
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok) return;
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

int max_independent_set(std::span<const Mask> adj, Mask allowed) {
  if (allowed == 0) return 0;
  // Branch on a vertex of maximum degree inside `allowed`; vertices of
  // degree <= 1 are taken greedily.
  Vertex pick = 0;
  int pick_deg = -1;
  for (Mask m = allowed; m != 0; m &= m - 1) {
    const Vertex v = lowest(m);
    const int d = popcount(adj[v] & allowed);
    if (d <= 1) return 1 + max_independent_set(adj, allowed & ~(adj[v] | bit(v)));
    if (d > pick_deg) {
      pick_deg = d;
      pick = v;
    }
  }
  const int with = 1 + max_independent_set(adj, allowed & ~(adj[pick] | bit(pick)));
  const int without = max_independent_set(adj, allowed & ~bit(pick));
  return std::max(with, without);
}

std::size_t independence_number(const Graph& g, const Budget& budget) {
  budget.require_vertices(g.order(), "independence_number");
  const auto adj = g.adjacency_masks();
  const Mask all = g.order() == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(g.order())) - 1);
  return static_cast<std::size_t>(max_independent_set(adj, all));
}

std::size_t independence_number(const Graph& g) { return independence_number(g, Budget{}); }

}  // namespace eil
