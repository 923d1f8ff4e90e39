#include "eil/canonical.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "eil/error.hpp"

namespace eil {

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.adjacency_masks()) {}

  CanonicalCode run() {
    std::vector<int> colors(n_, 0);
    search(colors);
    return CanonicalCode{n_, best_};
  }

  std::vector<Vertex> best_position() const { return best_position_; }

 private:
  // Iterated color refinement. Colors stay ranks 0..k-1 and the relative
  // order of existing cells is preserved.
  void refine(std::vector<int>& colors) const {
    std::size_t distinct = 0;
    std::vector<std::pair<std::vector<int>, Vertex>> sig(n_);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v].first;
        s.clear();
        s.push_back(colors[v]);
        for_each_bit(adj_[v], [&](Vertex u) { s.push_back(colors[u]); });
        std::sort(s.begin() + 1, s.end());
        sig[v].second = v;
      }
      std::sort(sig.begin(), sig.end());
      int rank = -1;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) ++rank;
        colors[sig[i].second] = rank;
      }
      const auto count = static_cast<std::size_t>(rank + 1);
      if (count == distinct) break;
      distinct = count;
    }
  }

  bool twins(Vertex a, Vertex b) const {
    return (adj_[a] & ~bit(b)) == (adj_[b] & ~bit(a));
  }

  void search(std::vector<int> colors) {
    refine(colors);
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, v); })) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (Vertex u = 0; u < n_; ++u) {
        next[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
      }
      search(std::move(next));
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<Mask> rows(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for_each_bit(adj_[v], [&](Vertex u) {
        rows[static_cast<std::size_t>(colors[v])] |= bit(static_cast<Vertex>(colors[u]));
      });
    }
    if (!have_best_ || rows > best_) {
      best_ = std::move(rows);
      have_best_ = true;
      best_position_.assign(n_, 0);
      for (Vertex v = 0; v < n_; ++v) best_position_[v] = static_cast<Vertex>(colors[v]);
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<Mask> best_;
  std::vector<Vertex> best_position_;
  bool have_best_ = false;
};

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  if (g.order() > 64) throw ResourceError("canonical_code: graphs above 64 vertices are not supported");
  return Canonizer(g).run();
}

Graph canonical_form(const Graph& g) {
  if (g.order() > 64) throw ResourceError("canonical_form: graphs above 64 vertices are not supported");
  Canonizer c(g);
  c.run();
  const auto pos = c.best_position();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(pos[e.u], pos[e.v]);
  return Graph::from_edges(g.order(), edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.num_edges() == b.num_edges() && canonical_code(a) == canonical_code(b);
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& perm) {
  if (a.order() != b.order() || perm.size() != a.order() || a.num_edges() != b.num_edges()) return false;
  std::vector<bool> hit(a.order(), false);
  for (Vertex p : perm) {
    if (p >= a.order() || hit[p]) return false;
    hit[p] = true;
  }
  for (const Edge& e : a.edges()) {
    if (!b.adjacent(perm[e.u], perm[e.v])) return false;
  }
  return true;
}

namespace {

std::vector<Graph> extend_level(const std::vector<Graph>& level, std::size_t k,
                                const EnumerationOptions& options) {
  std::map<CanonicalCode, Graph> next;
  const Mask subsets = Mask{1} << (k - 1);
  for (const Graph& base : level) {
    const auto base_edges = base.edges();
    for (Mask s = options.connected_only ? 1 : 0; s < subsets; ++s) {
      std::vector<Edge> edges = base_edges;
      for_each_bit(s, [&](Vertex u) { edges.emplace_back(u, static_cast<Vertex>(k - 1)); });
      Graph g = Graph::from_edges(k, edges);
      if (options.hereditary_filter && !options.hereditary_filter(g)) continue;
      auto code = canonical_code(g);
      if (!next.contains(code)) next.emplace(std::move(code), canonical_form(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(next.size());
  for (auto& [code, g] : next) out.push_back(std::move(g));
  return out;
}

template <class Sink>
void enumerate_levels(std::size_t max_n, const EnumerationOptions& options, Sink&& sink) {
  if (max_n == 0) return;
  if (max_n > 12) throw ResourceError("enumerate_graphs: exhaustive generation is limited to 12 vertices");
  std::vector<Graph> level{Graph(1)};
  if (options.hereditary_filter && !options.hereditary_filter(level.front())) return;
  sink(std::size_t{1}, level);
  for (std::size_t k = 2; k <= max_n; ++k) {
    level = extend_level(level, k, options);
    sink(k, level);
  }
}

}  // namespace

std::vector<Graph> enumerate_graphs_of_order(std::size_t n, const EnumerationOptions& options) {
  std::vector<Graph> out;
  enumerate_levels(n, options, [&](std::size_t k, const std::vector<Graph>& level) {
    if (k == n) out = level;
  });
  return out;
}

std::vector<Graph> enumerate_graphs(std::size_t max_n, const EnumerationOptions& options) {
  std::vector<Graph> out;
  enumerate_levels(max_n, options, [&](std::size_t, const std::vector<Graph>& level) {
    out.insert(out.end(), level.begin(), level.end());
  });
  return out;
}

Graph random_graph(std::uint64_t seed, std::size_t n, double p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_forest(std::uint64_t seed, std::size_t n, double attach) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(attach);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    if (!coin(rng)) continue;
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace eil
