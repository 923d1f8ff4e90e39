#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eil/bounds.hpp"

namespace eil {

enum class ScanSource { exhaustive, random, family };

struct ScanConfig {
  ScanSource source = ScanSource::exhaustive;
  /// exhaustive: every connected graph on 1..max_n vertices, one per
  /// isomorphism class.
  std::size_t max_n = 5;
  /// random: `count` graphs G(n, 1/2), graph i seeded from (seed, i).
  std::uint64_t seed = 0;
  std::size_t n = 8;
  std::size_t count = 100;
  /// family: "name:k" or "name:a-b"; see family_graphs.
  std::string family;
  std::size_t s_min = 1;
  std::size_t s_max = 1;
  Field field = Field::gf2;
  Budget budget;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Named constructions: cycle, path, complete, star, hn, gn (glued to a
/// 5-cycle at vertex 0 of each), with an optional "whisker-" prefix.
/// "hn:1-3" expands to three graphs.
std::vector<NamedGraph> family_graphs(const std::string& family);

/// Deterministic per-index seed derived from a scan seed.
std::uint64_t derive_seed(std::uint64_t seed, std::size_t index);

std::vector<NamedGraph> scan_graphs(const ScanConfig& config);

struct ScanSummary {
  std::size_t graphs = 0;
  std::size_t reports = 0;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t skipped = 0;
  std::size_t regularity_skipped = 0;
  /// "name s=k" of every report with a violated check.
  std::vector<std::string> violations;
  /// Reports certifying 2s + ind-match - 1 < reg < 2s + cochord - 1.
  std::vector<std::string> strict_gaps;
  std::string config;
};

/// One report per (graph, s), handed to `sink` in generation order.
ScanSummary scan(const ScanConfig& config, const std::function<void(const BoundsReport&)>& sink);

std::string describe(const ScanConfig& config);

}  // namespace eil
