#include <gtest/gtest.h>

#include <random>

#include "eil/betti.hpp"
#include "eil/canonical.hpp"
#include "eil/constructions.hpp"
#include "eil/graph_io.hpp"
#include "eil/matching.hpp"
#include "eil/monomial.hpp"
#include "eil/simplicial.hpp"
#include "oracle.hpp"

namespace {

using namespace eil;

using Table = std::map<std::pair<int, int>, std::uint64_t>;

MonomialIdeal ideal_of(std::size_t nvars, std::vector<Monomial> gens) {
  MonomialIdeal I;
  for (std::size_t i = 0; i < nvars; ++i) I.variables.push_back("x" + std::to_string(i));
  I.generators = minimal_generators(std::move(gens));
  return I;
}

Mask full(std::size_t n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

TEST(Monomial, Basics) {
  const Monomial m({{2, 1}, {0, 3}, {2, 1}, {5, 0}});
  EXPECT_EQ(m.terms(), (std::vector<Monomial::Term>{{0, 3}, {2, 2}}));
  EXPECT_EQ(m.degree(), 5u);
  EXPECT_EQ(m.exponent(1), 0u);
  EXPECT_FALSE(m.is_squarefree());
  EXPECT_TRUE(Monomial::product_of(0, 2).divides(m));
  EXPECT_FALSE(m.divides(Monomial::product_of(0, 2)));
  EXPECT_EQ(m.support_mask(), Mask{0b101});
  EXPECT_EQ(lcm(m, Monomial({{1, 1}, {2, 3}})), Monomial({{0, 3}, {1, 1}, {2, 3}}));
  EXPECT_EQ(Monomial::product_of(1, 1), Monomial({{1, 2}}));
  EXPECT_TRUE(Monomial().is_one());
}

TEST(Monomial, EdgeIdeal) {
  const auto k2 = edge_ideal(complete_graph(2));
  ASSERT_EQ(k2.generators.size(), 1u);
  EXPECT_EQ(k2.generators[0], Monomial::product_of(0, 1));
  EXPECT_EQ(edge_ideal(cycle_graph(5)).generators.size(), 5u);
  EXPECT_TRUE(edge_ideal(Graph(3)).is_zero());
  EXPECT_EQ(edge_ideal(Graph(3)).num_variables(), 3u);
}

TEST(Monomial, Powers) {
  const auto k2 = edge_ideal(complete_graph(2));
  const auto cube = ideal_power(k2, 3);
  ASSERT_EQ(cube.generators.size(), 1u);
  EXPECT_EQ(cube.generators[0], Monomial({{0, 3}, {1, 3}}));

  const auto c5sq = ideal_power(edge_ideal(cycle_graph(5)), 2);
  EXPECT_EQ(c5sq.generators.size(), 15u);
  for (const auto& a : c5sq.generators) {
    EXPECT_EQ(a.degree(), 4u);
    for (const auto& b : c5sq.generators)
      if (!(a == b)) EXPECT_FALSE(a.divides(b));
  }
  EXPECT_EQ(ideal_power(edge_ideal(cycle_graph(5)), 1).generators, edge_ideal(cycle_graph(5)).generators);
  EXPECT_THROW(ideal_power(k2, 0), InputError);
  Budget tight;
  tight.generators = 10;
  EXPECT_THROW(ideal_power(edge_ideal(cycle_graph(5)), 2, tight), ResourceError);
}

TEST(Monomial, MinimalGenerators) {
  const auto g = minimal_generators({Monomial({{0, 2}}), Monomial({{0, 1}}), Monomial({{0, 1}}),
                                     Monomial({{0, 1}, {1, 1}})});
  EXPECT_EQ(g, (std::vector<Monomial>{Monomial({{0, 1}})}));
}

TEST(Monomial, Polarization) {
  const auto x2 = polarize(ideal_of(1, {Monomial({{0, 2}})}));
  EXPECT_EQ(x2.ideal.num_variables(), 2u);
  ASSERT_EQ(x2.ideal.generators.size(), 1u);
  EXPECT_EQ(x2.ideal.generators[0], Monomial::product_of(0, 1));
  EXPECT_EQ(x2.origin, (std::vector<std::pair<Variable, std::uint32_t>>{{0, 1}, {0, 2}}));

  const auto c5 = edge_ideal(cycle_graph(5));
  const auto same = polarize(c5);
  EXPECT_EQ(same.ideal.generators, c5.generators);
  for (Variable v = 0; v < 5; ++v) EXPECT_EQ(same.origin[v], (std::pair<Variable, std::uint32_t>{v, 1}));

  const auto sq = polarize(ideal_power(c5, 2));
  EXPECT_LE(sq.ideal.num_variables(), 10u);
  EXPECT_TRUE(sq.ideal.is_squarefree());
  EXPECT_EQ(sq.ideal.generators.size(), 15u);
}

TEST(Simplicial, StanleyReisner) {
  const auto cx = stanley_reisner(edge_ideal(cycle_graph(5)));
  for (Mask f = 0; f < 32; ++f) {
    bool independent = true;
    for (Vertex i = 0; i < 5; ++i)
      if (((f >> i) & 1) && ((f >> ((i + 1) % 5)) & 1)) independent = false;
    EXPECT_EQ(cx.is_face(f), independent);
  }
  const auto simplex = stanley_reisner(edge_ideal(Graph(4)));
  for (Mask f = 0; f < 16; ++f) EXPECT_TRUE(simplex.is_face(f));
  const auto hollow = stanley_reisner(ideal_of(3, {Monomial({{0, 1}, {1, 1}, {2, 1}})}));
  EXPECT_FALSE(hollow.is_face(0b111));
  EXPECT_TRUE(hollow.is_face(0b011));
  EXPECT_THROW(stanley_reisner(ideal_of(1, {Monomial({{0, 2}})})), InputError);
}

TEST(Simplicial, HomologyExamples) {
  const SimplicialComplex hollow(3, {0b111});
  const SimplicialComplex simplex(4, {});
  for (Field f : {Field::gf2, Field::rational}) {
    EXPECT_EQ(reduced_homology_dims(hollow, 0b111, f), (std::map<int, std::size_t>{{1, 1}}));
    EXPECT_TRUE(reduced_homology_dims(simplex, 0b1111, f).empty());
    EXPECT_TRUE(reduced_homology_dims(simplex, 0b0101, f).empty());
    EXPECT_EQ(reduced_homology_dims(simplex, 0, f), (std::map<int, std::size_t>{{-1, 1}}));
    EXPECT_EQ(reduced_homology_dims(hollow.faces(0b111), f), (std::map<int, std::size_t>{{1, 1}}));
  }
  // Two points.
  EXPECT_EQ(reduced_homology_dims(SimplicialComplex(2, {0b11}), 0b11, Field::gf2),
            (std::map<int, std::size_t>{{0, 1}}));
}

TEST(Simplicial, TorsionSeparatesTheFields) {
  // Six-vertex triangulation of the real projective plane.
  const std::vector<std::array<int, 3>> facets = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                                  {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<Mask> nonfaces;
  for (Mask f = 1; f < 64; ++f) {
    bool face = false;
    for (const auto& t : facets)
      if ((f & ~((Mask{1} << t[0]) | (Mask{1} << t[1]) | (Mask{1} << t[2]))) == 0) face = true;
    if (!face) nonfaces.push_back(f);
  }
  const SimplicialComplex rp2(6, nonfaces);
  EXPECT_EQ(reduced_homology_dims(rp2, full(6), Field::gf2), (std::map<int, std::size_t>{{1, 1}, {2, 1}}));
  EXPECT_TRUE(reduced_homology_dims(rp2, full(6), Field::rational).empty());
  EXPECT_EQ(oracle::reduced_homology([&] {
              std::vector<Mask> all;
              for (const auto& level : rp2.faces(full(6))) all.insert(all.end(), level.begin(), level.end());
              return all;
            }(), false),
            (std::map<int, std::size_t>{{1, 1}, {2, 1}}));
}

// The cone, suspension and Alexander dual shortcuts against plain boundary
// ranks and the dense oracle, on seeded random complexes.
TEST(Simplicial, ReducedPathMatchesDirectComputation) {
  std::mt19937_64 rng(1234567);
  std::size_t compared = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n = 2 + trial % 8;
    std::uniform_int_distribution<Mask> pick(1, full(n));
    std::uniform_int_distribution<int> count(1, 8);
    std::vector<Mask> nonfaces;
    for (int k = count(rng); k > 0; --k) nonfaces.push_back(pick(rng));
    const SimplicialComplex cx(n, nonfaces);
    for (Mask w = 0; w <= full(n); ++w) {
      const auto faces = cx.faces(w);
      std::vector<Mask> flat;
      for (const auto& level : faces) flat.insert(flat.end(), level.begin(), level.end());
      for (Field f : {Field::gf2, Field::rational}) {
        const auto fast = reduced_homology_dims(cx, w, f);
        ASSERT_EQ(fast, reduced_homology_dims(faces, f)) << "trial " << trial << " w " << w;
        ASSERT_EQ(fast, oracle::reduced_homology(flat, f == Field::rational));
        std::int64_t chi = 0;
        for (const auto& [d, h] : fast) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h);
        ASSERT_EQ(chi, reduced_euler_characteristic(cx, w));
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 10000u);
}

TEST(Simplicial, DualFacesGiveUpAtCap) {
  const SimplicialComplex cx(6, {0b11, 0b1100});
  EXPECT_FALSE(cx.dual_faces(full(6), 2).has_value());
  EXPECT_TRUE(cx.dual_faces(full(6), 1000).has_value());
}

TEST(Betti, Examples) {
  const auto one = betti_table(edge_ideal(complete_graph(2)));
  EXPECT_EQ(one.entries, (Table{{{0, 0}, 1}, {{1, 2}, 1}}));
  const auto c5 = betti_table(edge_ideal(cycle_graph(5)));
  EXPECT_EQ(c5.reg_quotient(), 2);
  EXPECT_EQ(c5.reg_ideal(), 3);
  const auto gap = betti_table(edge_ideal(disjoint_union({complete_graph(2), complete_graph(2)})));
  EXPECT_GE(gap.at(2, 4), 1u);
  EXPECT_EQ(gap.at(2, 4), oracle::betti_power(disjoint_union({complete_graph(2), complete_graph(2)}), 1, false).at({2, 4}));
  EXPECT_EQ(gap.reg_quotient(), 2);
  const auto zero = betti_table(edge_ideal(Graph(3)));
  EXPECT_EQ(zero.entries, (Table{{{0, 0}, 1}}));
  EXPECT_EQ(zero.reg_ideal(), 0);
  EXPECT_EQ(zero.projective_dimension(), 0);
  EXPECT_THROW(betti_table(ideal_of(1, {Monomial({{0, 2}})})), InputError);
}

TEST(Betti, RegularityExamples) {
  for (Field f : {Field::gf2, Field::rational}) {
    EXPECT_EQ(regularity_of_power(cycle_graph(5), 1, f).reg_ideal(), 3);
    EXPECT_EQ(regularity_of_power(cycle_graph(5), 2, f).reg_ideal(), 4);
  }
  for (std::size_t s = 1; s <= 5; ++s) {
    const auto r = regularity_of_power(complete_graph(2), s);
    EXPECT_EQ(r.reg_ideal(), static_cast<int>(2 * s));
    EXPECT_EQ(r.reg_quotient(), static_cast<int>(2 * s - 1));
  }
  const auto c5sq = regularity_of_power(cycle_graph(5), 2);
  EXPECT_EQ(c5sq.betti.entries, (Table{{{0, 0}, 1}, {{1, 4}, 15}, {{2, 5}, 24}, {{3, 6}, 10}}));
  EXPECT_EQ(c5sq.generators, 15u);
  EXPECT_EQ(c5sq.polarized_variables, 10u);
  EXPECT_EQ(polarized_variable_count(cycle_graph(5), 2), 10u);
}

TEST(Betti, BudgetIsEnforced) {
  Budget tight;
  tight.subset = 9;
  EXPECT_THROW(regularity_of_power(cycle_graph(5), 2, Field::gf2, tight), ResourceError);
  EXPECT_THROW(regularity_of_power(cycle_graph(5), 0), InputError);
}

TEST(Betti, UnionClosure) {
  EXPECT_EQ(union_closure({0b001, 0b010, 0b011}), (std::vector<Mask>{0b001, 0b010, 0b011}));
  EXPECT_EQ(union_closure({0b101, 0b110}), (std::vector<Mask>{0b101, 0b110, 0b111}));
  EXPECT_TRUE(union_closure({}).empty());
}

TEST(Betti, FirstRowCountsGenerators) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + trial % 5, 0.5);
    for (std::size_t s = 1; s <= 2; ++s) {
      const auto I = ideal_power(edge_ideal(g), s);
      const auto r = regularity_of_power(g, s);
      EXPECT_EQ(r.betti.at(0, 0), 1u);
      std::map<int, std::uint64_t> by_degree;
      for (const auto& m : I.generators) ++by_degree[static_cast<int>(m.degree())];
      for (const auto& [j, count] : by_degree) EXPECT_EQ(r.betti.at(1, j), count);
    }
  }
}

// The polarized Hochster engine against the upper Koszul oracle on the
// unpolarized ideal, in both fields.
TEST(BettiOracle, AllGraphsUpToFiveVertices) {
  for (const Graph& g : enumerate_graphs(5)) {
    for (std::size_t s = 1; s <= 2; ++s) {
      for (Field f : {Field::gf2, Field::rational}) {
        const auto r = regularity_of_power(g, s, f);
        ASSERT_EQ(r.betti.entries, oracle::betti_power(g, s, f == Field::rational))
            << to_graph6(g) << " s=" << s << " " << field_name(f);
      }
    }
  }
}

TEST(BettiOracle, SixVertexGraphsFirstPower) {
  for (const Graph& g : enumerate_graphs_of_order(6)) {
    const auto r = regularity_of_power(g, 1, Field::gf2);
    ASSERT_EQ(r.betti.entries, oracle::betti_power(g, 1, false)) << to_graph6(g);
  }
}

TEST(BettiOracle, RandomSixVertexSecondAndThirdPowers) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = oracle::random_graph(rng, 5 + trial % 2, 0.4);
    const std::size_t s = 2 + trial % 2;
    if (polarized_variable_count(g, s) > 18) continue;
    ASSERT_EQ(regularity_of_power(g, s).betti.entries, oracle::betti_power(g, s, false)) << to_graph6(g);
  }
}

TEST(Betti, EulerCheckedAndFieldsAgree) {
  BettiOptions gf2{Field::gf2, true};
  BettiOptions q{Field::rational, true};
  for (const Graph& g : enumerate_graphs(6)) {
    const auto I = edge_ideal(g);
    const auto a = betti_table(I, gf2);
    const auto b = betti_table(I, q);
    ASSERT_EQ(a.entries, b.entries) << to_graph6(g);
  }
}

TEST(Betti, FirstPowerRegularityIsDirectHochster) {
  // reg(S/I(G)) = max{d + 1 : H_d(Ind(G)[W]) != 0} over every W.
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.4);
    const auto cx = stanley_reisner(edge_ideal(g));
    int best = 0;
    for (Mask w = 0; w <= full(g.order()); ++w)
      for (const auto& [d, h] : reduced_homology_dims(cx.faces(w), Field::gf2))
        if (h > 0) best = std::max(best, d + 1);
    EXPECT_EQ(regularity_of_power(g, 1).reg_quotient(), best) << to_graph6(g);
  }
}

TEST(Betti, AgreesWithOracleOnGeneralMonomialIdeals) {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::uniform_int_distribution<int> exponent(0, 3);
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<std::vector<int>> raw;
    std::vector<Monomial> gens;
    for (int k = count(rng); k > 0; --k) {
      std::vector<int> e(n);
      std::vector<Monomial::Term> terms;
      for (std::size_t v = 0; v < n; ++v) {
        e[v] = exponent(rng);
        terms.emplace_back(static_cast<Variable>(v), static_cast<std::uint32_t>(e[v]));
      }
      if (Monomial(terms).is_one()) continue;
      raw.push_back(e);
      gens.emplace_back(terms);
    }
    if (gens.empty()) continue;
    const MonomialIdeal I = ideal_of(n, gens);
    for (Field f : {Field::gf2, Field::rational}) {
      BettiOptions opts{f, true};
      ASSERT_EQ(regularity(I, opts).betti.entries, oracle::betti_of_ideal(n, raw, f == Field::rational))
          << "trial " << trial;
    }
  }
}

}  // namespace
