#include "eil/graph_io.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "eil/error.hpp"

namespace eil {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  return s;
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw InputError(std::string("graph6: byte '") + c + "' outside the printable range 63..126");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw InputError("graph6: truncated 18-bit vertex count");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 4;
  } else {
    if (text.size() < 8) throw InputError("graph6: truncated 36-bit vertex count");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 8;
  }
  if (n > (1U << 20)) throw ResourceError("graph6: vertex count too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw InputError("graph6: expected " + std::to_string(bytes) + " adjacency bytes for n=" +
                     std::to_string(n) + ", found " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k) {
    if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1) throw InputError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  auto put = [&](std::uint64_t v) { out.push_back(static_cast<char>(v + kBias)); };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) put((n >> shift) & 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) put((n >> shift) & 63);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        put(static_cast<std::uint64_t>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) put(static_cast<std::uint64_t>(acc << (6 - filled)));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("edgelist: first line must be 'n m'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw InputError("edgelist: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edgelist: edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    }
    if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw InputError("edgelist: trailing data after " + std::to_string(m) + " edges");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw InputError("json graph: missing integer field 'n'");
  }
  const long long n = j["n"].get<long long>();
  if (n < 0) throw InputError("json graph: negative vertex count");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw InputError("json graph: each edge must be a pair of integers");
      }
      const long long u = e[0].get<long long>();
      const long long v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("json graph: edge endpoint out of range");
      if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  Graph g = Graph::from_edges(static_cast<std::size_t>(n), edges);
  if (j.contains("labels") && j["labels"].is_object() && !j["labels"].empty()) {
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    for (const auto& [key, value] : j["labels"].items()) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(key);
      } catch (const std::exception&) {
        throw InputError("json graph: label key '" + key + "' is not a vertex id");
      }
      if (idx >= labels.size()) throw InputError("json graph: label for missing vertex " + key);
      labels[idx] = value.is_string() ? value.get<std::string>() : value.dump();
    }
    g = g.with_labels(std::move(labels));
  }
  return g;
}

std::string to_graph_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  j["labels"] = nlohmann::json::object();
  if (g.has_labels()) {
    for (Vertex v = 0; v < g.order(); ++v) j["labels"][std::to_string(v)] = g.label(v);
  }
  return j.dump();
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "json") return GraphFormat::json;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

GraphFormat guess_format(std::string_view path) {
  if (path.ends_with(".g6") || path.ends_with(".graph6")) return GraphFormat::graph6;
  if (path.ends_with(".json")) return GraphFormat::json;
  return GraphFormat::edgelist;
}

Graph read_graph(std::istream& in, GraphFormat format) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  switch (format) {
    case GraphFormat::graph6: return parse_graph6(text);
    case GraphFormat::edgelist: return parse_edgelist(text);
    case GraphFormat::json: return parse_graph_json(text);
  }
  throw InputError("unknown graph format");
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return read_graph(in, format);
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::string format_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: return to_graph6(g) + "\n";
    case GraphFormat::edgelist: return to_edgelist(g);
    case GraphFormat::json: return to_graph_json(g) + "\n";
  }
  return {};
}

}  // namespace eil
