#include <gtest/gtest.h>

#include <random>

#include "eil/canonical.hpp"
#include "eil/chordal.hpp"
#include "eil/constructions.hpp"
#include "eil/graph_io.hpp"
#include "eil/matching.hpp"
#include "oracle.hpp"

namespace {

using namespace eil;

CochordalCover whole(const Graph& g) { return CochordalCover{{g.edges()}}; }

TEST(Chordal, Examples) {
  EXPECT_TRUE(is_chordal(complete_graph(6)));
  const auto c4 = check_chordal(cycle_graph(4));
  EXPECT_FALSE(c4.chordal);
  EXPECT_EQ(c4.induced_cycle.size(), 4u);
  EXPECT_TRUE(is_chordal(random_forest(9, 12)));
  EXPECT_TRUE(is_chordal(Graph(0)));
}

TEST(Chordal, Certificates) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 9, 0.5);
    const auto cert = check_chordal(g);
    ASSERT_EQ(cert.chordal, oracle::is_chordal(g)) << to_graph6(g);
    if (cert.chordal) {
      EXPECT_TRUE(is_perfect_elimination_ordering(g, cert.elimination_order));
    } else {
      const auto& cyc = cert.induced_cycle;
      ASSERT_GE(cyc.size(), 4u);
      VertexSet on(g.order());
      for (Vertex v : cyc) on.insert(v);
      const auto sub = induced_subgraph(g, on);
      EXPECT_EQ(sub.graph.num_edges(), cyc.size());
      for (std::size_t i = 0; i < cyc.size(); ++i) EXPECT_TRUE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
  }
}

TEST(Chordal, SimplicialVertices) {
  EXPECT_EQ(simplicial_vertices(complete_graph(3)), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(simplicial_vertices(path_graph(4)), (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(simplicial_vertices(cycle_graph(5)).empty());
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 8, 0.6);
    if (is_chordal(g)) EXPECT_FALSE(simplicial_vertices(g).empty());
  }
}

TEST(Cochordal, Examples) {
  EXPECT_FALSE(is_cochordal(cycle_graph(5)));
  EXPECT_TRUE(is_cochordal(path_graph(4)));
  EXPECT_FALSE(is_cochordal(disjoint_union({complete_graph(2), complete_graph(2)})));
}

TEST(Cochord, Examples) {
  EXPECT_EQ(cochord_number(path_graph(4)).value, 1u);
  EXPECT_EQ(cochord_number(complete_graph(5)).value, 1u);
  EXPECT_EQ(cochord_number(cycle_graph(5)).value, 2u);
  EXPECT_EQ(cochord_number(disjoint_union({complete_graph(2), complete_graph(2)})).value, 2u);
  EXPECT_EQ(cochord_number(Graph(4)).value, 0u);
  EXPECT_TRUE(cochord_number(Graph(4)).witness.parts.empty());
}

TEST(Cochord, CoverValidation) {
  const Graph c5 = cycle_graph(5);
  EXPECT_THROW(validate_cover(c5, whole(c5)), InputError);
  CochordalCover partial{{{Edge(0, 1), Edge(1, 2)}}};
  EXPECT_FALSE(is_valid_cover(c5, partial));
  CochordalCover foreign{{{Edge(0, 2)}}};
  EXPECT_FALSE(is_valid_cover(c5, foreign));
  EXPECT_TRUE(is_valid_cover(c5, cochord_number(c5).witness));
}

TEST(Cochord, BudgetIsEnforced) {
  Budget tight;
  tight.edges = 4;
  EXPECT_THROW(cochord_number(cycle_graph(5), tight), ResourceError);
}

TEST(Cochord, LemmaWitnessExamples) {
  const Graph c5 = cycle_graph(5);
  const auto w5 = lemma_cochord_witness(c5, cochord_number(c5).witness);
  EXPECT_EQ(w5.remainder.graph, complete_graph(2));
  EXPECT_EQ(w5.cover.size(), 1u);

  const Graph k2 = complete_graph(2);
  const auto w2 = lemma_cochord_witness(k2, whole(k2));
  EXPECT_EQ(w2.remainder.graph.order(), 0u);
  EXPECT_TRUE(w2.cover.parts.empty());

  const Graph p4 = path_graph(4);
  const auto w4 = lemma_cochord_witness(p4, whole(p4));
  EXPECT_TRUE(w4.cover.parts.empty());
  EXPECT_EQ(w4.remainder.graph.num_edges(), 0u);

  EXPECT_THROW(lemma_cochord_witness(c5, whole(c5)), InputError);
  EXPECT_THROW(lemma_cochord_witness(Graph(3), CochordalCover{}), PreconditionError);
}

TEST(CochordOracle, ExhaustiveUpToSix) {
  for (const Graph& g : enumerate_graphs(6)) {
    const auto r = cochord_number(g);
    ASSERT_EQ(r.value, oracle::cochord_number(g)) << to_graph6(g);
    ASSERT_TRUE(is_valid_cover(g, r.witness));
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_EQ(is_cochordal(g), oracle::is_cochordal(g));
    EXPECT_LE(induced_matching_number(g), r.value);
  }
}

TEST(CochordOracle, SevenVertexGraphsWithFewEdges) {
  EnumerationOptions opts;
  opts.hereditary_filter = [](const Graph& g) { return g.num_edges() <= 10; };
  for (const Graph& g : enumerate_graphs_of_order(7, opts)) {
    ASSERT_EQ(cochord_number(g).value, oracle::cochord_number(g)) << to_graph6(g);
  }
}

TEST(Cochord, DeletingAClosedNeighborhoodLowersCochord) {
  for (const Graph& g : enumerate_graphs(7)) {
    if (g.num_edges() == 0) continue;
    const auto r = cochord_number(g);
    bool found = false;
    for (Vertex w = 0; w < g.order() && !found; ++w)
      found = cochord_number(delete_closed_neighborhood(g, w).graph).value + 1 <= r.value;
    ASSERT_TRUE(found) << to_graph6(g);
    const auto lw = lemma_cochord_witness(g, r.witness);
    EXPECT_LE(lw.cover.size() + 1, r.value);
    EXPECT_TRUE(is_valid_cover(lw.remainder.graph, lw.cover));
  }
}

TEST(Cochord, DisjointUnionsSitBetweenMaxAndSum) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph a = oracle::random_graph(rng, 2 + trial % 3, 0.6);
    const Graph b = oracle::random_graph(rng, 2 + (trial / 3) % 3, 0.6);
    const std::size_t ca = cochord_number(a).value;
    const std::size_t cb = cochord_number(b).value;
    const std::size_t cu = cochord_number(disjoint_union({a, b})).value;
    EXPECT_GE(cu, std::max(ca, cb));
    EXPECT_LE(cu, ca + cb);
  }
}

}  // namespace
