#include "eil/scan.hpp"

#include <charconv>

#include "eil/canonical.hpp"
#include "eil/constructions.hpp"

namespace eil {

namespace {

std::size_t parse_size(std::string_view text, const std::string& family) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw InputError("family '" + family + "': bad number '" + std::string(text) + "'");
  }
  return v;
}

Graph build_family_member(std::string_view name, std::size_t k) {
  if (name == "hn") return build_Hn(k);
  if (name == "gn") return build_Gn(cycle_graph(5), 0, k, 0);
  return build_standard(parse_standard_kind(name), k);
}

}  // namespace

std::vector<NamedGraph> family_graphs(const std::string& family) {
  const auto colon = family.find(':');
  if (colon == std::string::npos) throw InputError("family '" + family + "': expected NAME:K or NAME:A-B");
  std::string_view name(family.data(), colon);
  const std::string_view range(family.data() + colon + 1, family.size() - colon - 1);
  bool whiskered = false;
  if (name.starts_with("whisker-")) {
    whiskered = true;
    name.remove_prefix(8);
  }
  std::size_t lo = 0;
  std::size_t hi = 0;
  if (const auto dash = range.find('-'); dash != std::string_view::npos) {
    lo = parse_size(range.substr(0, dash), family);
    hi = parse_size(range.substr(dash + 1), family);
  } else {
    lo = hi = parse_size(range, family);
  }
  if (lo > hi) throw InputError("family '" + family + "': empty range");
  std::vector<NamedGraph> out;
  for (std::size_t k = lo; k <= hi; ++k) {
    Graph g = build_family_member(name, k);
    if (whiskered) g = whisker(g);
    out.push_back({(whiskered ? "whisker-" : "") + std::string(name) + ":" + std::to_string(k), std::move(g)});
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<NamedGraph> scan_graphs(const ScanConfig& config) {
  std::vector<NamedGraph> out;
  switch (config.source) {
    case ScanSource::exhaustive: {
      config.budget.require_vertices(config.max_n, "scan");
      if (config.max_n > 10) throw ResourceError("scan: exhaustive enumeration is limited to 10 vertices");
      EnumerationOptions opts;
      opts.connected_only = true;
      std::size_t i = 0;
      for (Graph& g : enumerate_graphs(config.max_n, opts)) {
        out.push_back({"exhaustive:" + std::to_string(g.order()) + ":" + std::to_string(i++), std::move(g)});
      }
      break;
    }
    case ScanSource::random:
      config.budget.require_vertices(config.n, "scan");
      for (std::size_t i = 0; i < config.count; ++i) {
        const std::uint64_t seed = derive_seed(config.seed, i);
        out.push_back({"random:" + std::to_string(config.seed) + ":" + std::to_string(i) + ":seed=" +
                           std::to_string(seed),
                       random_graph(seed, config.n)});
      }
      break;
    case ScanSource::family:
      out = family_graphs(config.family);
      break;
  }
  return out;
}

std::string describe(const ScanConfig& config) {
  std::string d;
  switch (config.source) {
    case ScanSource::exhaustive:
      d = "exhaustive n<=" + std::to_string(config.max_n);
      break;
    case ScanSource::random:
      d = "random seed=" + std::to_string(config.seed) + " n=" + std::to_string(config.n) +
          " count=" + std::to_string(config.count);
      break;
    case ScanSource::family:
      d = "family " + config.family;
      break;
  }
  return d + " s=" + std::to_string(config.s_min) + ".." + std::to_string(config.s_max) + " field=" +
         field_name(config.field);
}

ScanSummary scan(const ScanConfig& config, const std::function<void(const BoundsReport&)>& sink) {
  if (config.s_min == 0 || config.s_min > config.s_max) throw InputError("scan: need 1 <= s_min <= s_max");
  ScanSummary summary;
  summary.config = describe(config);
  for (const NamedGraph& ng : scan_graphs(config)) {
    ++summary.graphs;
    const Invariants inv = compute_invariants(ng.graph, config.budget);
    for (std::size_t s = config.s_min; s <= config.s_max; ++s) {
      const BoundsReport r = evaluate_bounds(ng.graph, inv, s, config.field, config.budget, ng.name);
      ++summary.reports;
      summary.holds += r.count(CheckStatus::holds);
      summary.violated += r.count(CheckStatus::violated);
      summary.skipped += r.count(CheckStatus::skipped);
      if (!r.reg_ideal && ng.graph.num_edges() > 0) ++summary.regularity_skipped;
      const std::string tag = ng.name + " s=" + std::to_string(s);
      if (r.any_violated()) summary.violations.push_back(tag);
      if (r.strict_gap) summary.strict_gaps.push_back(tag);
      if (sink) sink(r);
    }
  }
  return summary;
}

}  // namespace eil
