#include <gtest/gtest.h>

#include <random>

#include "eil/canonical.hpp"
#include "eil/constructions.hpp"
#include "eil/graph_io.hpp"
#include "eil/matching.hpp"
#include "oracle.hpp"

namespace {

using namespace eil;

const Graph kC5 = cycle_graph(5);
const Graph kK2 = complete_graph(2);
const Graph kP4 = path_graph(4);
const Graph k2K2 = disjoint_union({kK2, kK2});

TEST(Matching, Numbers) {
  EXPECT_EQ(matching_number(kC5), 2u);
  EXPECT_EQ(matching_number(kK2), 1u);
  EXPECT_EQ(matching_number(build_Hn(2)), oracle::matching_counts(build_Hn(2)).match);
  EXPECT_EQ(matching_number(build_Hn(2)), 5u);

  EXPECT_EQ(min_maximal_matching_number(kP4), 1u);
  EXPECT_EQ(min_maximal_matching_number(kK2), 1u);
  EXPECT_EQ(min_maximal_matching_number(kC5), 2u);
  EXPECT_EQ(min_maximal_matching_number(Graph(4)), 0u);

  EXPECT_EQ(induced_matching_number(kC5), 1u);
  EXPECT_EQ(induced_matching_number(k2K2), 2u);
  EXPECT_EQ(induced_matching_number(kP4), 1u);
}

TEST(Matching, Witnesses) {
  const Graph g = build_Hn(2);
  const Matching m = maximum_matching(g);
  EXPECT_TRUE(is_matching(g, m));
  EXPECT_EQ(m.size(), 5u);
  const Matching mm = minimum_maximal_matching(kP4);
  EXPECT_TRUE(is_maximal_matching(kP4, mm));
  ASSERT_EQ(mm.size(), 1u);
  EXPECT_EQ(mm.edges[0], Edge(1, 2));
  const Matching im = maximum_induced_matching(k2K2);
  EXPECT_TRUE(is_induced_matching(k2K2, im));
  EXPECT_EQ(im.size(), 2u);
}

TEST(Matching, Gap) {
  EXPECT_TRUE(has_gap(k2K2));
  EXPECT_FALSE(has_gap(kC5));
  EXPECT_FALSE(has_gap(complete_graph(4)));
}

TEST(Matching, BudgetIsEnforced) {
  Budget tight;
  tight.vertices = 4;
  EXPECT_THROW(matching_number(kC5, tight), ResourceError);
  EXPECT_THROW(ind_match_k2c5(kC5, tight), ResourceError);
  EXPECT_THROW(min_match_k2c5(kC5, CycleMode::allow_chords, tight), ResourceError);
}

TEST(HSubgraph, Maximality) {
  HSubgraph mid;
  mid.k2 = {Edge(1, 2)};
  EXPECT_TRUE(is_maximal_h_subgraph(kP4, mid));
  HSubgraph edge;
  edge.k2 = {Edge(0, 1)};
  EXPECT_FALSE(is_maximal_h_subgraph(kC5, edge));
  HSubgraph cyc;
  cyc.c5 = {{0, 1, 2, 3, 4}};
  EXPECT_TRUE(is_maximal_h_subgraph(kC5, cyc));
  EXPECT_EQ(cyc.match_number(), 2u);
}

TEST(HSubgraph, Validation) {
  HSubgraph overlap;
  overlap.k2 = {Edge(0, 1), Edge(1, 2)};
  EXPECT_THROW(validate_h_subgraph(kC5, overlap), InputError);
  HSubgraph missing;
  missing.k2 = {Edge(0, 2)};
  EXPECT_THROW(validate_h_subgraph(kC5, missing), InputError);
  HSubgraph not_cycle;
  not_cycle.c5 = {{0, 2, 4, 1, 3}};
  EXPECT_THROW(validate_h_subgraph(kC5, not_cycle), InputError);
  HSubgraph gapless;
  gapless.k2 = {Edge(0, 1), Edge(2, 3)};
  EXPECT_NO_THROW(validate_h_subgraph(kC5, gapless));
  EXPECT_THROW(validate_h_subgraph(kC5, gapless, true), InputError);
}

TEST(HSubgraph, Examples) {
  EXPECT_EQ(ind_match_k2c5(kC5).value, 2u);
  EXPECT_EQ(ind_match_k2c5(kK2).value, 1u);
  const Graph c5k2 = disjoint_union({kC5, kK2});
  EXPECT_EQ(ind_match_k2c5(c5k2).value, oracle::h_counts(c5k2).ind_match);
  EXPECT_EQ(ind_match_k2c5(c5k2).value, 3u);

  EXPECT_EQ(min_match_k2c5(kP4).value, 1u);
  EXPECT_EQ(min_match_k2c5(kC5).value, 2u);
  EXPECT_EQ(min_match_k2c5(kK2).value, 1u);

  const auto empty = ind_match_k2c5(Graph(3));
  EXPECT_EQ(empty.value, 0u);
  EXPECT_TRUE(empty.witness.k2.empty());
  EXPECT_TRUE(empty.witness.c5.empty());
  EXPECT_EQ(min_match_k2c5(Graph(3)).value, 0u);
}

TEST(HSubgraph, WitnessesCertifyTheirValues) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + trial % 8, 0.45);
    const auto ind = ind_match_k2c5(g);
    EXPECT_NO_THROW(validate_h_subgraph(g, ind.witness, true));
    EXPECT_EQ(ind.witness.match_number(), ind.value);
    for (CycleMode mode : {CycleMode::allow_chords, CycleMode::induced_only}) {
      const auto mn = min_match_k2c5(g, mode);
      EXPECT_NO_THROW(validate_h_subgraph(g, mn.witness));
      EXPECT_TRUE(is_maximal_h_subgraph(g, mn.witness));
      EXPECT_EQ(mn.witness.match_number(), mn.value);
    }
  }
}

TEST(FiveCycles, CountsAgreeWithEnumeration) {
  EXPECT_EQ(five_cycles(kC5).size(), 1u);
  EXPECT_EQ(five_cycles(complete_graph(5)).size(), 12u);
  EXPECT_TRUE(five_cycles(kC5)[0].induced);
  EXPECT_EQ(five_cycles(complete_graph(6)).size(), 72u);
}

// Every graph on at most 7 vertices against the brute-force oracles.
TEST(MatchingOracle, ExhaustiveUpToSeven) {
  std::size_t chord_sensitive = 0;
  for (const Graph& g : enumerate_graphs(7)) {
    const auto mc = oracle::matching_counts(g);
    const auto hc = oracle::h_counts(g);
    ASSERT_EQ(matching_number(g), mc.match) << to_graph6(g);
    ASSERT_EQ(min_maximal_matching_number(g), mc.min_maximal);
    ASSERT_EQ(induced_matching_number(g), mc.induced);
    ASSERT_EQ(has_gap(g), mc.induced >= 2);
    const std::size_t ind = ind_match_k2c5(g).value;
    const std::size_t mn = min_match_k2c5(g).value;
    const std::size_t mn_strict = min_match_k2c5(g, CycleMode::induced_only).value;
    ASSERT_EQ(ind, hc.ind_match);
    ASSERT_EQ(mn, hc.min_match);
    ASSERT_EQ(mn_strict, hc.min_match_induced_cycles);
    if (mn != mn_strict) ++chord_sensitive;

    EXPECT_LE(mc.induced, ind);
    EXPECT_LE(mn, mc.min_maximal);
    EXPECT_LE(mc.induced, mc.match);
    EXPECT_LE(mc.min_maximal, mc.match);
    if (girth(g).at_least(4) && five_cycles(g).empty()) {
      EXPECT_EQ(ind, mc.induced);
      EXPECT_EQ(mn, mc.min_maximal);
    }
  }
  RecordProperty("chord_sensitive_graphs", static_cast<int>(chord_sensitive));
}

TEST(MatchingOracle, VertexDeletionNeverRaisesMinMatchK2C5) {
  for (const Graph& g : enumerate_graphs(7)) {
    const std::size_t base = min_match_k2c5(g).value;
    for (Vertex w = 0; w < g.order(); ++w) {
      ASSERT_LE(min_match_k2c5(delete_vertex(g, w).graph).value, base);
    }
  }
}

}  // namespace
