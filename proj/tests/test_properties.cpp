#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "property_support.hpp"

using namespace geodex;
using namespace props;

TEST(SmallGraphs, CountsMatchKnownSequence) {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853, 11117};
  for (unsigned n = 1; n <= 8; ++n) {
    EXPECT_EQ(all_graphs().at(n).size(), all[n - 1]) << n;
    EXPECT_EQ(connected_graphs(n).size(), connected[n - 1]) << n;
  }
}

TEST(SmallGraphs, AutomorphismOrderMatchesExhaustiveFiltering) {
  std::size_t checked = 0;
  for (unsigned n = 1; n <= 7; ++n)
    for (const auto& g : connected_graphs(n)) {
      const auto want = oracle::automorphisms(g).size();
      const auto G = automorphism_group(g);
      ASSERT_EQ(G.order(), want) << "n=" << n;
      for (const auto& s : G.generators()) ASSERT_TRUE(is_automorphism(g, s));
      ++checked;
    }
  EXPECT_EQ(checked, 996U);
}

TEST(SmallGraphs, CertificatesSeparateClassesAndIgnoreLabels) {
  std::mt19937 rng(99);
  for (unsigned n = 5; n <= 7; ++n) {
    std::set<std::pair<std::uint64_t, std::vector<Edge>>> distinct;
    for (const auto& g : connected_graphs(n)) {
      const auto c = canonical_certificate(g);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0U);
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_TRUE(c == canonical_certificate(relabel(g, perm)));
      distinct.insert({c.invariant_hash, c.edges});
    }
    EXPECT_EQ(distinct.size(), connected_graphs(n).size());
  }
}

TEST(SmallGraphs, IntersectionArraysMatchNaive) {
  std::size_t drg = 0, total = 0;
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& g : connected_graphs(n)) {
      ++total;
      const auto got = intersection_array(g);
      const auto want = oracle::intersection_array(g);
      ASSERT_EQ(got.has_value(), want.has_value()) << "n=" << n;
      if (got) {
        ASSERT_EQ(got->flat(), *want);
        ++drg;
      }
      // level by level as well
      const auto d = static_cast<unsigned>(oracle::diameter(g));
      for (unsigned i = 1; i <= d; ++i) {
        const auto x = intersection_numbers(g, i);
        const auto y = oracle::numbers(g, static_cast<int>(i));
        ASSERT_EQ(x.has_value(), y.has_value());
        if (x) ASSERT_EQ((oracle::Numbers{int(x->c), int(x->a), int(x->b)}), *y);
      }
    }
  EXPECT_EQ(total, 1U + 1 + 2 + 6 + 21 + 112 + 853 + 11117);
  EXPECT_GT(drg, 0U);
}

TEST(DoubleCovers, InvariantsOnRandomVertexTransitiveGraphs) {
  const auto graphs = random_test_graphs();
  ASSERT_EQ(graphs.size(), 50U);
  std::size_t rich = 0;
  for (const auto& [name, g] : graphs) {
    SCOPED_TRACE(name);
    const auto G = automorphism_group(g);
    ASSERT_TRUE(is_vertex_transitive(g, G));
    const auto h = sdc(g);
    const auto H = lifted_group(G);
    ASSERT_TRUE(is_connected(h));
    // c_2 = c in one iff in the other
    EXPECT_EQ(constant_c2(g), constant_c2(h));
    // (G,s)-distance-transitivity, s up to the diameter of g
    const unsigned d = diameter(g);
    const auto a = transitivity(g, G, TransitivityMode::Distance, d).max_s;
    const auto b = transitivity(h, H, TransitivityMode::Distance, d).max_s;
    EXPECT_EQ(a, b);
    rich += a >= 2;
    // with a_2 = 0, (G,3)-geodesic-transitivity transfers in both directions
    if (d >= 3 && a2_zero(g)) {
      const bool x = transitivity(g, G, TransitivityMode::Geodesic, 3).max_s >= 3;
      const bool y = transitivity(h, H, TransitivityMode::Geodesic, 3).max_s >= 3;
      EXPECT_EQ(x, y);
    }
  }
  EXPECT_GT(rich, 0U);
}

TEST(DoubleCovers, DistanceTransitivityTransferNeedsOddGirthBound) {
  // girth 4, odd girth 5, diameter 3, distance-transitive; the double cover
  // merges Γ_3(u) with the Γ_2(u) vertices reached by odd walks of length 3
  const auto g = punctured_golay_coset_graph();
  ASSERT_EQ(g.order(), 512U);
  ASSERT_EQ(intersection_array(g)->to_string(), "(21,20,16;1,2,12)");
  ASSERT_TRUE(eligible(g));
  const auto G = automorphism_group(g);
  EXPECT_EQ(G.order(), 61931520U);
  const auto h = sdc(g);
  const auto H = lifted_group(G);
  EXPECT_EQ(distances_from(h, 0).dist[512], 5);  // odd girth
  EXPECT_EQ(transitivity(g, G, TransitivityMode::Distance, 3).max_s, 3U);
  const auto r = transitivity(h, H, TransitivityMode::Distance, 3);
  EXPECT_EQ(r.max_s, 2U);
  EXPECT_EQ(r.per_s.back().orbit_size, 215040U);
  EXPECT_EQ(r.per_s.back().tuple_count, 501760U);
  // below half the odd girth the transfer holds
  EXPECT_EQ(transitivity(h, H, TransitivityMode::Distance, 2).max_s, 2U);
}

TEST(SchreierSims, RelabeledGraphsGiveEqualOrders) {
  std::mt19937 rng(4242);
  for (const auto& [name, g] : random_test_graphs()) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0U);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(automorphism_group(g).order(), automorphism_group(relabel(g, perm)).order()) << name;
  }
}
