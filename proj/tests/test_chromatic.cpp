#include "graphs.hpp"
#include "oracles.hpp"
#include "superheap/superheap.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace superheap;

namespace {

RationalPoly q_minus(int c) { return RationalPoly::q() - RationalPoly::constant(c); }

RationalPoly power(const RationalPoly& p, int e) {
  RationalPoly r = RationalPoly::constant(1);
  for (int j = 0; j < e; ++j) r = r * p;
  return r;
}

void expect_counts_colorings(const Supergraph& g, const WeightVector& k, const RationalPoly& p) {
  ASSERT_EQ(p.degree(), k.height());
  for (int q = 0; q <= k.height(); ++q)
    EXPECT_EQ(p(Rational(q)), Rational(oracle::count_multicolorings(g, k, q))) << k.to_string() << " at q=" << q;
}

std::multiset<std::vector<int>> flatten(const BondPartition& p) {
  std::multiset<std::vector<int>> out;
  for (const auto& b : p.blocks)
    for (int j = 0; j < b.multiplicity; ++j) out.insert(b.block.counts());
  return out;
}

}  // namespace

TEST(ChromaticSimple, SmallGraphs) {
  auto q = RationalPoly::q();
  EXPECT_EQ(chromatic_poly_simple(fixtures::edgeless(1)), q);
  EXPECT_EQ(chromatic_poly_simple(fixtures::path(2)), q * q_minus(1));
  EXPECT_EQ(chromatic_poly_simple(fixtures::complete(3)), q * q_minus(1) * q_minus(2));
  EXPECT_EQ(chromatic_poly_simple(fixtures::path(4)), q * power(q_minus(1), 3));
  EXPECT_EQ(chromatic_poly_simple(fixtures::edgeless(3)), power(q, 3));
}

TEST(ChromaticSimple, MatchesColoringCountsOnAllFourVertexGraphs) {
  for (const auto& adj : oracle::all_graphs(4)) {
    auto g = Supergraph::from_masks(adj, 0);
    expect_counts_colorings(g, WeightVector({1, 1, 1, 1}), chromatic_poly_simple(g));
  }
}

TEST(KChromatic, EdgeWorkedExample) {
  auto want = binomial(RationalPoly::q(), 3) * binomial(q_minus(3), 3);
  auto e36 = fixtures::edge36();
  EXPECT_EQ(k_chromatic_direct(e36, WeightVector({3, 3})), want);
  EXPECT_EQ(k_chromatic_join(e36, WeightVector({3, 3})), want);
  EXPECT_EQ(k_chromatic_direct(fixtures::ex1_annotated(), WeightVector({0, 0, 3, 0, 0, 3})), want);
}

TEST(KChromatic, PathWorkedExample) {
  auto want = RationalPoly::q() * power(q_minus(1), 3) * power(q_minus(2), 2) * Rational(1, 4);
  auto k = WeightVector({2, 1, 0, 1, 2, 0});
  EXPECT_EQ(k_chromatic_direct(fixtures::ex1_plain(), k), want);
  EXPECT_EQ(k_chromatic_join(fixtures::ex1_plain(), k), want);
}

TEST(KChromatic, SingleVertexAndZeroWeight) {
  auto g = fixtures::edgeless(1);
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(k_chromatic_direct(g, WeightVector({m})), binomial(RationalPoly::q(), m));
  EXPECT_EQ(k_chromatic_direct(g, WeightVector({0})), RationalPoly::constant(1));
}

TEST(KChromatic, AllOnesIsInducedSubgraph) {
  auto p4 = fixtures::path(4);
  EXPECT_EQ(k_chromatic_join(p4, WeightVector({1, 1, 0, 1})), chromatic_poly_simple(fixtures::path(2)) * RationalPoly::q());
  EXPECT_EQ(k_chromatic_direct(p4, WeightVector({1, 1, 1, 1})), chromatic_poly_simple(p4));
}

TEST(KChromatic, JoinGraphReproducesDirect) {
  auto p4 = fixtures::path(4);
  auto k = WeightVector({2, 1, 1, 1});
  EXPECT_EQ(k_chromatic_join(p4, k), k_chromatic_direct(p4, k));
}

TEST(KChromatic, CountsMulticoloringsOnThreeVertexGraphs) {
  for (const auto& adj : oracle::all_graphs(3)) {
    auto g = Supergraph::from_masks(adj, 0);
    for (const auto& k : weights_up_to(WeightVector({2, 2, 2})))
      if (!k.is_zero()) expect_counts_colorings(g, k, k_chromatic_direct(g, k));
  }
}

TEST(KChromatic, RandomGraphsDirectEqualsJoin) {
  std::mt19937 rng(1234);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 2) edges.emplace_back(a, b);
    auto g = oracle::graph_from_edges(n, edges, 0);
    std::vector<int> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = static_cast<int>(rng() % 4);
    if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) c[0] = 1;
    WeightVector k(c);
    auto direct = k_chromatic_direct(g, k);
    EXPECT_EQ(direct, k_chromatic_join(g, k)) << k.to_string();
    EXPECT_EQ(direct.degree(), k.height());
  }
}

TEST(KChromatic, SignPatternAndLinearTerm) {
  for (const auto& adj : oracle::all_graphs(3)) {
    auto g = Supergraph::from_masks(adj, 0);
    for (const auto& k : weights_up_to(WeightVector({3, 2, 2}))) {
      if (k.is_zero()) continue;
      auto p = k_chromatic_direct(g, k);
      EXPECT_EQ(p.coefficient(0), 0);
      for (int j = 1; j <= p.degree(); ++j) {
        Rational c = p.coefficient(j);
        if (c != 0) { EXPECT_EQ(c > 0, (k.height() - j) % 2 == 0) << k.to_string() << " q^" << j; }
      }
      EXPECT_EQ(p.coefficient(1) != 0, is_connected_set(g, k.support())) << k.to_string();
    }
  }
}

TEST(BondLattice, SmallExamples) {
  EXPECT_EQ(bond_lattice(fixtures::edgeless(1), WeightVector({2})).size(), 2u);
  EXPECT_EQ(bond_lattice(fixtures::path(2), WeightVector({1, 1})).size(), 2u);
  EXPECT_EQ(bond_lattice(fixtures::edgeless(2), WeightVector({1, 1})).size(), 1u);
  EXPECT_TRUE(bond_lattice(fixtures::path(2), WeightVector({0, 0})).empty());
}

TEST(BondLattice, MatchesSetPartitionOracle) {
  for (const auto& adj : oracle::all_graphs(3)) {
    auto g = Supergraph::from_masks(adj, 0);
    for (const auto& k : weights_up_to(WeightVector({2, 2, 1}))) {
      if (k.is_zero()) continue;
      auto got = bond_lattice(g, k);
      std::set<std::multiset<std::vector<int>>> mine;
      for (const auto& p : got) {
        EXPECT_TRUE(mine.insert(flatten(p)).second);
        for (const auto& b : p.blocks) EXPECT_TRUE(is_connected_set(g, b.block.support()));
      }
      EXPECT_EQ(mine, oracle::bond_partitions(g, k)) << k.to_string();
    }
  }
  auto p3 = fixtures::path(3);
  EXPECT_EQ(bond_lattice(p3, WeightVector({1, 1, 1})).size(), oracle::bond_partitions(p3, WeightVector({1, 1, 1})).size());
}

TEST(TheoremRhs, EdgeWorkedExample) {
  auto g = fixtures::ex1_annotated();
  MultiplicityEngine me(g);
  auto k = WeightVector({0, 0, 3, 0, 0, 3});
  auto rhs = theorem_rhs(g, k, [&](const WeightVector& w) { return me.recursion(w); });
  EXPECT_EQ(rhs, binomial(RationalPoly::q(), 3) * binomial(q_minus(3), 3));
}

TEST(TheoremRhs, SingletonAndErrors) {
  auto g = fixtures::edgeless(1, {"1"});
  auto one = [](const WeightVector&) { return BigInt(1); };
  EXPECT_EQ(theorem_rhs(g, WeightVector({1}), one), RationalPoly::q());
  auto ex1 = fixtures::ex1_annotated();
  EXPECT_THROW(theorem_rhs(ex1, WeightVector({2, 0, 0, 0, 0, 0}), one), DomainError);
}

TEST(TheoremRhs, EqualsChromaticWithHeapCounts) {
  for (const auto& adj : oracle::all_graphs(3)) {
    for (VertexMask psi = 0; psi < 8; ++psi) {
      auto g = Supergraph::from_masks(adj, psi);
      HeapCatalog cat(g);
      auto mult = [&](const WeightVector& w) { return BigInt(cat.super_lyndon_count(w)); };
      for (const auto& k : weights_up_to(WeightVector({2, 2, 2}))) {
        if (k.is_zero()) continue;
        EXPECT_EQ(theorem_rhs(g, k, mult), k_chromatic_direct(g, k)) << k.to_string() << " psi " << psi;
      }
    }
  }
}

TEST(TheoremRhs, OddVertexNeedsMultiplicityOfSquare) {
  auto g = fixtures::edgeless(1, {"1"});
  auto k = WeightVector({2});
  auto heaps = [&](const WeightVector& w) { return BigInt(enumerate_super_lyndon_heaps(g, w).size()); };
  EXPECT_EQ(theorem_rhs(g, k, heaps), k_chromatic_direct(g, k));
  auto without = [](const WeightVector& w) { return BigInt(w[0] == 1 ? 1 : 0); };
  EXPECT_NE(theorem_rhs(g, k, without), k_chromatic_direct(g, k));
}
