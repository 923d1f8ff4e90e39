#include "eil/constructions.hpp"

#include <string>

#include "eil/error.hpp"

namespace eil {

Graph whisker(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>(n + v));
  Graph out = Graph::from_edges(2 * n, edges);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) labels.push_back(g.label(v));
    for (Vertex v = 0; v < n; ++v) labels.push_back("u(" + g.label(v) + ")");
    out = out.with_labels(std::move(labels));
  }
  return out;
}

Graph build_Hn(std::size_t n) {
  if (n < 1) throw InputError("build_Hn: n must be at least 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  auto id = [](std::size_t cycle, std::size_t j) { return static_cast<Vertex>(5 * cycle + (j - 1)); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= 5; ++j) {
      edges.emplace_back(id(i, j), id(i, j % 5 + 1));
      labels.push_back("v" + std::to_string(j) + "^" + std::to_string(i + 1));
    }
    if (i + 1 < n) edges.emplace_back(id(i, 3), id(i + 1, 1));
  }
  return Graph::from_edges(5 * n, edges).with_labels(std::move(labels));
}

Graph identify_vertices(const Graph& g1, Vertex u, const Graph& g2, Vertex x) {
  if (u >= g1.order()) throw InputError("identify_vertices: u is not a vertex of the first graph");
  if (x >= g2.order()) throw InputError("identify_vertices: x is not a vertex of the second graph");
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  const auto z = static_cast<Vertex>(n1 + n2 - 2);
  auto map1 = [&](Vertex v) { return v == u ? z : (v < u ? v : v - 1); };
  auto map2 = [&](Vertex v) {
    return v == x ? z : static_cast<Vertex>(n1 - 1 + (v < x ? v : v - 1));
  };
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges()) edges.emplace_back(map1(e.u), map1(e.v));
  for (const Edge& e : g2.edges()) edges.emplace_back(map2(e.u), map2(e.v));
  Graph out = Graph::from_edges(n1 + n2 - 1, edges);
  if (g1.has_labels() || g2.has_labels()) {
    std::vector<std::string> labels(n1 + n2 - 1);
    for (Vertex v = 0; v < n1; ++v) {
      if (v != u) labels[map1(v)] = "a:" + g1.label(v);
    }
    for (Vertex v = 0; v < n2; ++v) {
      if (v != x) labels[map2(v)] = "b:" + g2.label(v);
    }
    labels[z] = "z";
    out = out.with_labels(std::move(labels));
  }
  return out;
}

Graph build_Gn(const Graph& h, Vertex u, std::size_t n, Vertex x) {
  if (x >= 5 * n) throw InputError("build_Gn: x must be one of the 5n vertices of H_n");
  return identify_vertices(h, u, whisker(build_Hn(n)), x);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle_graph: a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw InputError("path_graph: a path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw InputError("complete_graph: size must be at least 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw InputError("star_graph: needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  std::size_t offset = 0;
  std::vector<Edge> edges;
  for (const Graph& p : parts) {
    for (const Edge& e : p.edges()) {
      edges.emplace_back(static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset));
    }
    offset += p.order();
  }
  return Graph::from_edges(offset, edges);
}

StandardKind parse_standard_kind(std::string_view name) {
  if (name == "cycle") return StandardKind::cycle;
  if (name == "path") return StandardKind::path;
  if (name == "complete") return StandardKind::complete;
  if (name == "star") return StandardKind::star;
  if (name == "empty") return StandardKind::empty;
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

Graph build_standard(StandardKind kind, std::size_t size) {
  switch (kind) {
    case StandardKind::cycle: return cycle_graph(size);
    case StandardKind::path: return path_graph(size);
    case StandardKind::complete: return complete_graph(size);
    case StandardKind::star: return star_graph(size);
    case StandardKind::empty:
      if (size < 1) throw InputError("empty graph: size must be at least 1");
      return Graph(size);
  }
  throw InputError("unknown graph family");
}

}  // namespace eil
