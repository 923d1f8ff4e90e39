// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any failed.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eil/betti.hpp"
#include "eil/bounds.hpp"
#include "eil/canonical.hpp"
#include "eil/constructions.hpp"
#include "eil/graph_io.hpp"
#include "eil/matching.hpp"
#include "eil/scan.hpp"

namespace {

using namespace eil;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool run(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << out.detail.str()
            << seconds_since(t0) << " s]" << std::endl;
  return out.pass;
}

template <class F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return seconds_since(t0);
}

void criterion1(Outcome& o) {
  for (Field f : {Field::gf2, Field::rational}) {
    int reg = 0;
    const double t = timed([&] { reg = regularity_of_power(cycle_graph(5), 1, f).reg_ideal(); });
    o.require(reg == 3, std::string("reg over ") + field_name(f) + " is " + std::to_string(reg));
    o.require(t < 1.0, "slower than 1 s");
    o.detail << field_name(f) << " reg=" << reg << "; ";
  }
}

void criterion2(Outcome& o) {
  const std::vector<std::pair<std::size_t, int>> cases = {{2, 4}, {3, 6}};
  for (const auto& [s, expect] : cases) {
    RegularityResult r;
    const double t = timed([&] { r = regularity_of_power(cycle_graph(5), s, Field::gf2); });
    o.require(r.reg_ideal() == expect, "s=" + std::to_string(s) + " gave " + std::to_string(r.reg_ideal()));
    o.require(t < (s == 2 ? 10.0 : 600.0), "s=" + std::to_string(s) + " too slow");
    o.require(r.polarized_variables <= 15, "more than 15 polarized variables");
    o.detail << "s=" << s << " reg=" << r.reg_ideal() << " vars=" << r.polarized_variables << "; ";
  }
}

void criterion3(Outcome& o) {
  const double t = timed([&] {
    for (std::size_t s = 1; s <= 5; ++s) {
      const int reg = regularity_of_power(complete_graph(2), s).reg_ideal();
      const int t2 = static_cast<int>(ind_match_k2c5(complete_graph(2)).value);
      o.require(reg == static_cast<int>(2 * s), "s=" + std::to_string(s));
      o.require(reg == static_cast<int>(2 * s) + t2 - 1, "odd equality at s=" + std::to_string(s));
    }
  });
  o.require(t < 1.0, "slower than 1 s");
  o.detail << "s=1..5; ";
}

void criterion4(Outcome& o) {
  ScanConfig cfg;
  cfg.source = ScanSource::exhaustive;
  cfg.max_n = 6;
  std::size_t missing = 0;
  const ScanSummary one = scan(cfg, [&](const BoundsReport& r) {
    for (const Check& c : r.checks)
      if (c.status == CheckStatus::skipped && c.note.starts_with("over-budget")) ++missing;
  });
  o.require(one.violated == 0, "s=1 violations: " + std::to_string(one.violated));
  o.require(missing == 0, "s=1 over-budget checks: " + std::to_string(missing));
  o.detail << "s=1 graphs=" << one.graphs << " holds=" << one.holds << " violated=" << one.violated << "; ";

  cfg.s_min = cfg.s_max = 2;
  cfg.budget.subset = 18;
  const ScanSummary two = scan(cfg, nullptr);
  o.require(two.violated == 0, "s=2 violations: " + std::to_string(two.violated));
  o.detail << "s=2 graphs=" << two.graphs << " computed=" << two.reports - two.regularity_skipped
           << " over-18-vars=" << two.regularity_skipped << " violated=" << two.violated << "; ";
}

void criterion5(Outcome& o) {
  std::size_t graphs = 0;
  std::size_t searches = 0;
  for (const Graph& g : enumerate_graphs(6)) {
    if (g.num_edges() == 0) continue;
    ++graphs;
    for (auto f : {HereditaryInvariant::cochord, HereditaryInvariant::min_match, HereditaryInvariant::min_match_k2c5}) {
      ++searches;
      o.require(hereditary_witness_search(g, f).found, "no witness for " + std::string(invariant_name(f)) + " on " +
                                                          to_graph6(g));
    }
    const std::size_t base = min_match_k2c5(g).value;
    for (Vertex w = 0; w < g.order(); ++w)
      o.require(min_match_k2c5(delete_vertex(g, w).graph).value <= base, "deletion raised min-match on " + to_graph6(g));
  }
  o.detail << "graphs=" << graphs << " searches=" << searches << "; ";
}

void criterion6(Outcome& o) {
  std::size_t checked = 0;
  std::size_t over = 0;
  for (std::size_t i = 0; i < 25; ++i) {
    const std::uint64_t seed = derive_seed(6, i);
    const std::size_t n = 4 + i % 7;
    const Graph g = random_forest(seed, n);
    if (g.num_edges() == 0) {
      o.detail << "seed " << seed << " edgeless; ";
      continue;
    }
    const long im = static_cast<long>(induced_matching_number(g));
    for (std::size_t s = 1; s <= 2; ++s) {
      if (polarized_variable_count(g, s) > Budget{}.subset) {
        ++over;
        continue;
      }
      const long reg = regularity_of_power(g, s).reg_ideal();
      o.require(reg == 2 * static_cast<long>(s) + im - 1, "forest " + to_graph6(g) + " s=" + std::to_string(s));
      ++checked;
    }
  }
  o.detail << "equalities=" << checked << " over-budget=" << over << "; ";
}

void criterion7(Outcome& o) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Graph h = build_Hn(n);
    o.require(h.order() == 5 * n && h.num_edges() == 6 * n - 1, "H_" + std::to_string(n) + " counts");
  }
  const Graph w = whisker(build_Hn(1));
  const int reg = regularity_of_power(w, 1).reg_ideal();
  const auto im = static_cast<int>(induced_matching_number(w));
  const auto t = static_cast<int>(ind_match_k2c5(w).value);
  const auto cc = cochord_number(w);
  o.require(reg - 1 == im && im == t, "W(H_1) equalities");
  o.require(cc.value >= 3 && is_valid_cover(w, cc.witness), "cochord(W(H_1)) >= 3");
  o.detail << "W(H_1): reg=" << reg << " ind-match=" << im << " ind-match_K2C5=" << t << " cochord=" << cc.value
           << "; ";
}

void criterion8(Outcome& o) {
  const Graph k2 = complete_graph(2);
  const std::vector<std::pair<std::string, Graph>> partners = {{"K2", k2}, {"C5", cycle_graph(5)}};
  for (const auto& [name, b] : partners) {
    for (std::size_t s = 1; s <= 2; ++s) {
      const UnionCheck u = disjoint_union_lower_check(k2, b, s);
      o.require(u.holds, "K2+" + name + " s=" + std::to_string(s));
      o.detail << "K2+" << name << " s=" << s << ": " << u.reg_union_s << ">=" << u.reg_a_s + u.reg_b - 1 << "; ";
    }
  }
}

void criterion9(Outcome& o) {
  std::size_t graphs = 0;
  for (const Graph& g : enumerate_graphs(6)) {
    const MonomialIdeal I = edge_ideal(g);
    const BettiTable a = betti_table(I, BettiOptions{Field::gf2, true});
    const BettiTable b = betti_table(I, BettiOptions{Field::rational, true});
    o.require(a.entries == b.entries, "fields disagree on " + to_graph6(g));
    ++graphs;
  }
  const SimplicialComplex hollow(3, {0b111});
  const SimplicialComplex simplex(4, {});
  for (Field f : {Field::gf2, Field::rational}) {
    o.require(reduced_homology_dims(hollow, 0b111, f) == std::map<int, std::size_t>{{1, 1}}, "hollow triangle");
    o.require(reduced_homology_dims(simplex, 0b1111, f).empty(), "simplex");
    o.require(reduced_homology_dims(simplex, 0, f) == std::map<int, std::size_t>{{-1, 1}}, "{empty set}");
  }
  o.detail << "edge ideals=" << graphs << " with Euler check; ";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "reg(I(C5)) = 3 over GF(2) and Q", criterion1);
  ok &= run(2, "reg(I(C5)^2) = 4 and reg(I(C5)^3) = 6", criterion2);
  ok &= run(3, "reg(I(K2)^s) = 2s for s <= 5", criterion3);
  ok &= run(4, "bounds hold on all connected graphs with <= 6 vertices", criterion4);
  ok &= run(5, "hereditary witnesses and deletion monotonicity on <= 6 vertices", criterion5);
  ok &= run(6, "reg(I(F)^s) = 2s + ind-match(F) - 1 on 25 seeded forests", criterion6);
  ok &= run(7, "H_n counts, W(H_1) equalities, cochord(W(H_1)) >= 3", criterion7);
  ok &= run(8, "disjoint union lower bound on K2+K2 and K2+C5", criterion8);
  ok &= run(9, "GF(2) and Q Betti tables agree, Euler checks, homology fixtures", criterion9);
  return ok ? 0 : 1;
}
