#include <gtest/gtest.h>

#include <fstream>

#include "geodex/constructions.hpp"
#include "geodex/permgroup_io.hpp"
#include "geodex/symmetry.hpp"
#include "oracles.hpp"

using namespace geodex;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::Overflow;
}

/// Translations x -> x ^ (1 << b) and coordinate swaps of H(d,2).
PermGroup hamming_generators(unsigned d) {
  const auto n = std::size_t{1} << d;
  std::vector<Permutation> gens;
  for (unsigned b = 0; b < d; ++b) {
    std::vector<Vertex> img(n);
    for (Vertex x = 0; x < n; ++x) img[x] = x ^ (1U << b);
    gens.emplace_back(img);
  }
  for (unsigned b = 0; b + 1 < d; ++b) {
    std::vector<Vertex> img(n);
    for (Vertex x = 0; x < n; ++x) {
      const Vertex lo = x >> b & 1U, hi = x >> (b + 1) & 1U;
      img[x] = (x & ~(3U << b)) | (hi << b) | (lo << (b + 1));
    }
    gens.emplace_back(img);
  }
  return PermGroup(n, gens);
}

}  // namespace

TEST(VertexTransitivity, Examples) {
  EXPECT_TRUE(is_vertex_transitive(petersen(), automorphism_group(petersen())));
  const auto p3 = from_edge_list(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(is_vertex_transitive(p3, automorphism_group(p3)));
  const auto h5 = hamming_generators(5);
  EXPECT_TRUE(is_vertex_transitive(hamming_2(5), h5));
  EXPECT_EQ(group_order(h5), 3840U);
}

TEST(VertexTransitivity, RejectsNonAutomorphisms) {
  const PermGroup bad(10, {Permutation::from_cycles(10, {{0, 1}})});
  EXPECT_EQ(code_of([&] { is_vertex_transitive(petersen(), bad); }), Errc::NotAutomorphisms);
}

TEST(Transitivity, HammingCubeGeodesicButNotArc) {
  const auto h = hamming_2(3);
  const auto G = automorphism_group(h);
  const auto geo = transitivity(h, G, TransitivityMode::Geodesic, 3);
  EXPECT_EQ(geo.max_s, 3U);
  ASSERT_EQ(geo.per_s.size(), 3U);
  EXPECT_EQ(geo.per_s[2].tuple_count, 48U);

  const auto arc = transitivity(h, G, TransitivityMode::Arc, 3);
  EXPECT_EQ(arc.max_s, 2U);
  ASSERT_EQ(arc.per_s.size(), 3U);
  const auto& bad = arc.per_s.back();
  EXPECT_FALSE(bad.covers);
  EXPECT_EQ(bad.tuple_count, 96U);
  EXPECT_EQ(bad.orbit_size, 48U);
  ASSERT_TRUE(bad.witness);
  // the seed closes a 4-cycle; the witness is a geodesic
  EXPECT_TRUE(h.adjacent(bad.seed.front(), bad.seed.back()));
  EXPECT_EQ(distances_from(h, bad.witness->front()).dist[bad.witness->back()], 3);
}

TEST(Transitivity, CycleArcs) {
  const auto c5 = cycle(5);
  EXPECT_EQ(transitivity(c5, automorphism_group(c5), TransitivityMode::Arc, 2).max_s, 2U);
  const PermGroup rot(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  EXPECT_EQ(transitivity(c5, rot, TransitivityMode::Arc, 1).max_s, 0U);
}

TEST(Transitivity, CumulativeLevels) {
  for (const auto& g : {petersen(), dodecahedron(), hos2()}) {
    const auto G = automorphism_group(g);
    for (auto mode : {TransitivityMode::Arc, TransitivityMode::Geodesic, TransitivityMode::Distance}) {
      const auto r = transitivity(g, G, mode, 4);
      for (unsigned s = 0; s < r.max_s; ++s) EXPECT_TRUE(r.per_s[s].covers);
    }
  }
}

TEST(Transitivity, GeodesicImpliesDistance) {
  for (const auto& g : {wells(), hamming_2(4), hos2(), dodecahedron(), cycle(8)}) {
    const auto G = automorphism_group(g);
    const auto geo = transitivity(g, G, TransitivityMode::Geodesic, diameter(g));
    const auto dist = transitivity(g, G, TransitivityMode::Distance, diameter(g));
    EXPECT_GE(dist.max_s, geo.max_s);
  }
}

TEST(Transitivity, AgreesWithBruteForceOrbits) {
  const auto g = petersen();
  const auto G = automorphism_group(g);
  const auto elements = oracle::group_elements(10, G.generators());
  ASSERT_EQ(elements.size(), 120U);
  for (unsigned s = 1; s <= 4; ++s) {
    const auto arcs = oracle::arcs(g, s);
    const auto orb = oracle::tuple_orbit(elements, arcs.front());
    const auto r = transitivity(g, G, TransitivityMode::Arc, s);
    EXPECT_EQ(r.per_s.back().orbit_size, orb.size());
    EXPECT_EQ(r.max_s >= s, orb.size() == arcs.size()) << "s=" << s;
  }
}

TEST(Transitivity, SuppliedGroupFromFile) {
  std::ifstream in(std::string(GEODEX_DATA_DIR) + "/hamming_3_translations.json");
  ASSERT_TRUE(in);
  const auto G = read_group(in);
  const auto r = transitivity(hamming_2(3), G, TransitivityMode::Arc, 1);
  EXPECT_EQ(r.max_s, 0U);
  EXPECT_EQ(r.per_s[0].orbit_size, 8U);
}

TEST(Transitivity, Errors) {
  EXPECT_EQ(code_of([] { parse_mode("walk"); }), Errc::BadParameter);
  const auto g = from_edge_list(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(code_of([&] { transitivity(g, automorphism_group(g), TransitivityMode::Arc, 1); }), Errc::Disconnected);
  const auto h = hamming_2(3);
  EXPECT_EQ(code_of([&] { transitivity(h, automorphism_group(h), TransitivityMode::Arc, 3, 5); }),
            Errc::TupleBudgetExceeded);
}

TEST(GeodesicTransitive, Examples) {
  for (const auto& g : {dodecahedron(), hos2(), cycle(4), petersen()})
    EXPECT_TRUE(is_geodesic_transitive(g, automorphism_group(g)));
  const auto diamond = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_FALSE(is_geodesic_transitive(diamond, automorphism_group(diamond)));
}

TEST(OrbitByStabilizers, MatchesEnumeration) {
  const auto g = hoffman_singleton();
  const auto G = automorphism_group(g);
  auto arcs = enumerate_s_arcs(g, 3);
  ASSERT_TRUE(arcs.next());
  const std::vector<Vertex> seed(arcs.current().begin(), arcs.current().end());
  EXPECT_EQ(tuple_orbit_size_by_stabilizers(G, seed), count_tuples(enumerate_s_arcs(g, 3)));
}

TEST(LocalAction, Examples) {
  const auto hs = hoffman_singleton();
  const auto la = local_action(hs, automorphism_group(hs), 0);
  EXPECT_EQ(la.degree, 7U);
  EXPECT_EQ(la.image_order, 5040U);
  EXPECT_TRUE(la.action.faithful);
  EXPECT_GE(la.transitivity_degree, 3U);
  EXPECT_TRUE(la.two_primitive);

  const auto p = petersen();
  const auto lp = local_action(p, automorphism_group(p), 0);
  EXPECT_EQ(lp.degree, 3U);
  EXPECT_TRUE(lp.two_transitive);
  EXPECT_FALSE(lp.action.faithful);
  EXPECT_EQ(lp.action.kernel_order, 2U);

  for (unsigned m = 2; m <= 5; ++m) {
    const auto k = complete_bipartite(m, m);
    const auto lk = local_action(k, automorphism_group(k), 0);
    GroupOrder fact = 1;
    for (unsigned i = 2; i <= m; ++i) fact *= i;
    EXPECT_EQ(lk.image_order, fact);
  }

  const auto p3 = from_edge_list(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(code_of([&] { local_action(p3, automorphism_group(p3), 1); }), Errc::NotTransitive);
}

TEST(Forcing, Instances) {
  const auto h = hos2();
  const auto rh = remark_23_forcing(h, automorphism_group(h));
  ASSERT_TRUE(rh.b2);
  EXPECT_EQ(*rh.b2, 1U);
  EXPECT_TRUE(rh.geodesic_transitive);

  const auto d = dodecahedron();
  const auto rd = remark_23_forcing(d, automorphism_group(d));
  ASSERT_TRUE(rd.b3);
  EXPECT_EQ(*rd.b3, 1U);
  EXPECT_TRUE(rd.geodesic_transitive);

  const auto p = petersen();
  const auto rp = remark_23_forcing(p, automorphism_group(p));
  EXPECT_EQ(*rp.b2, 0U);
  EXPECT_TRUE(rp.geodesic_transitive);

  const auto w = wells();
  EXPECT_TRUE(remark_23_forcing(w, automorphism_group(w)).geodesic_transitive);

  // H(4,2) has b_2 = 2, b_3 = 1, but (G,3)-geodesic-transitivity is needed first; it holds
  const auto h4 = hamming_2(4);
  EXPECT_EQ(remark_23_forcing(h4, automorphism_group(h4)).case_used, 3U);

  // H(5,2): b_2 = 3, b_3 = 2 so the hypothesis fails
  const auto h5 = hamming_2(5);
  EXPECT_EQ(code_of([&] { remark_23_forcing(h5, automorphism_group(h5)); }), Errc::HypothesisNotMet);
}
