#include <gtest/gtest.h>

#include <sstream>

#include "geodex/constructions.hpp"
#include "geodex/regularity.hpp"
#include "geodex/walks.hpp"
#include "oracles.hpp"

using namespace geodex;

namespace {

Graph path3() { return from_edge_list(3, {{0, 1}, {1, 2}}); }

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

}  // namespace

TEST(Graph, EdgeListBasics) {
  const auto tri = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(tri.edge_count(), 3U);
  EXPECT_TRUE(tri.adjacent(2, 0));
  EXPECT_FALSE(tri.adjacent(1, 1));

  const auto empty = from_edge_list(2, {});
  EXPECT_EQ(empty.edge_count(), 0U);

  const auto p = petersen();
  EXPECT_EQ(p.edge_count(), 15U);
  EXPECT_EQ(p.valency(), 3U);
}

TEST(Graph, EdgeErrors) {
  EXPECT_EQ(code_of([] { from_edge_list(3, {{0, 3}}); }), Errc::EndpointOutOfRange);
  EXPECT_EQ(code_of([] { from_edge_list(3, {{1, 1}}); }), Errc::LoopEdge);
  // duplicates collapse
  EXPECT_EQ(from_edge_list(3, {{0, 1}, {1, 0}}).edge_count(), 1U);
}

TEST(Graph, HandshakeAndSymmetry) {
  for (const auto& g : {petersen(), hoffman_singleton(), wells(), hamming_2(4)}) {
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbor_list(v)) EXPECT_TRUE(g.adjacent(w, v));
      EXPECT_FALSE(g.adjacent(v, v));
    }
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(Distances, Petersen) {
  const auto g = petersen();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto t = distances_from(g, v);
    EXPECT_EQ(std::count(t.dist.begin(), t.dist.end(), 0), 1);
    EXPECT_EQ(std::count(t.dist.begin(), t.dist.end(), 1), 3);
    EXPECT_EQ(std::count(t.dist.begin(), t.dist.end(), 2), 6);
  }
}

TEST(Distances, CompleteAndHamming) {
  const auto t = distances_from(complete(4), 2);
  EXPECT_EQ(std::count(t.dist.begin(), t.dist.end(), 0), 1);
  EXPECT_EQ(std::count(t.dist.begin(), t.dist.end(), 1), 3);

  // hamming_2 vertices are bit strings; distance from 0 is the weight
  const auto h = hamming_2(3);
  const auto d = distances_from(h, 0);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(d.dist[v], std::popcount(v));
}

TEST(Distances, AgreeWithFloydWarshall) {
  for (const auto& g : {petersen(), dodecahedron(), wells(), hos2(), folded_cube(5)}) {
    const auto ref = oracle::distance_matrix(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto t = distances_from(g, u);
      for (Vertex v = 0; v < g.order(); ++v) ASSERT_EQ(t.dist[v], ref[u][v]);
      for (auto [a, b] : g.edges()) EXPECT_LE(std::abs(t.dist[a] - t.dist[b]), 1);
    }
  }
}

TEST(Distances, DisconnectedIsUnreachable) {
  const auto g = from_edge_list(4, {{0, 1}});
  EXPECT_EQ(distances_from(g, 0).dist[3], kUnreachable);
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(code_of([&] { distances_from(g, 7); }), Errc::EndpointOutOfRange);
}

TEST(Invariants, DiameterAndGirth) {
  EXPECT_EQ(diameter(petersen()), 2U);
  EXPECT_EQ(girth(petersen()), 5U);
  EXPECT_EQ(diameter(hamming_2(3)), 3U);
  EXPECT_EQ(girth(hamming_2(3)), 4U);
  EXPECT_EQ(diameter(dodecahedron()), 5U);
  EXPECT_EQ(girth(dodecahedron()), 5U);
  EXPECT_EQ(girth(from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}})), kInfinite);
  EXPECT_EQ(girth(complete(3)), 3U);
  for (const auto& g : {hos2(), wells(), cycle(7), complete_multipartite(3, 2)}) {
    EXPECT_EQ(static_cast<int>(diameter(g)), oracle::diameter(g));
    EXPECT_EQ(static_cast<int>(girth(g)), *oracle::girth(g));
  }
}

TEST(Invariants, Spheres) {
  const auto hs = hoffman_singleton();
  EXPECT_EQ(sphere(hs, 0, 2).size(), 42U);
  EXPECT_EQ(sphere(higman_sims(), 5, 1).size(), 22U);
  EXPECT_EQ(sphere(petersen(), 4, 0), std::vector<Vertex>{4});
}

TEST(Walks, Counts) {
  EXPECT_EQ(count_tuples(enumerate_s_arcs(petersen(), 2)), 60U);
  EXPECT_EQ(count_tuples(enumerate_s_arcs(complete(2), 2)), 0U);
  EXPECT_EQ(count_tuples(enumerate_s_arcs(cycle(5), 3)), 10U);
  EXPECT_EQ(count_tuples(enumerate_s_geodesics(hamming_2(3), 3)), 48U);
  EXPECT_EQ(count_tuples(enumerate_s_geodesics(complete(3), 2)), 0U);
  EXPECT_EQ(count_tuples(enumerate_s_geodesics(petersen(), 2)), 60U);
}

TEST(Walks, MatchBruteForce) {
  for (const auto& g : {petersen(), hamming_2(3), cycle(6), complete_bipartite(3, 3), dodecahedron()}) {
    for (unsigned s = 1; s <= 4; ++s) {
      std::vector<std::vector<Vertex>> got;
      for_each_tuple(enumerate_s_arcs(g, s), [&](auto t) { got.emplace_back(t.begin(), t.end()); });
      auto want = oracle::arcs(g, s);
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want) << "arcs s=" << s;  // streams are lexicographic

      got.clear();
      for_each_tuple(enumerate_s_geodesics(g, s), [&](auto t) { got.emplace_back(t.begin(), t.end()); });
      auto wantg = oracle::geodesics(g, s);
      std::sort(wantg.begin(), wantg.end());
      EXPECT_EQ(got, wantg) << "geodesics s=" << s;
    }
  }
}

TEST(Walks, DistancePairs) {
  const auto g = petersen();
  std::size_t n = 0;
  for_each_tuple(DistancePairStream(g, 2), [&](auto t) {
    EXPECT_EQ(distances_from(g, t[0]).dist[t[1]], 2);
    ++n;
  });
  EXPECT_EQ(n, 60U);
}

TEST(Regularity, IntersectionNumbers) {
  const auto hs = intersection_numbers(higman_sims(), 2);
  ASSERT_TRUE(hs);
  EXPECT_EQ(hs->c, 6U);

  const auto gw = intersection_numbers(gewirtz(), 2);
  ASSERT_TRUE(gw);
  const auto ref = oracle::numbers(gewirtz(), 2);
  ASSERT_TRUE(ref);
  EXPECT_EQ(gw->c, 2U);
  EXPECT_EQ(static_cast<int>(gw->a), ref->a);
  EXPECT_EQ(gw->c + gw->a + gw->b, 10U);

  for (unsigned m = 2; m <= 5; ++m) {
    const auto x = intersection_numbers(complete_bipartite(m, m), 2);
    ASSERT_TRUE(x);
    EXPECT_EQ(x->c, m);
    EXPECT_EQ(x->a, 0U);
    EXPECT_EQ(x->b, 0U);
  }
}

TEST(Regularity, NotWellDefinedAndErrors) {
  EXPECT_FALSE(intersection_numbers(path3(), 1).has_value());
  EXPECT_EQ(code_of([] { intersection_numbers(petersen(), 3); }), Errc::LevelOutOfRange);
  EXPECT_EQ(code_of([] { intersection_numbers(from_edge_list(3, {{0, 1}}), 1); }), Errc::Disconnected);
}

TEST(Regularity, Arrays) {
  const auto dd = intersection_array(dodecahedron());
  ASSERT_TRUE(dd);
  EXPECT_EQ(dd->to_string(), "(3,2,1,1,1;1,1,1,2,3)");
  EXPECT_EQ(intersection_array(wells())->to_string(), "(5,4,1,1;1,1,4,5)");
  for (unsigned order : {4U, 8U}) {
    const auto mu = order / 2;
    const auto arr = intersection_array(hadamard_graph(hadamard_matrix(order, HadamardMethod::Sylvester)));
    ASSERT_TRUE(arr);
    EXPECT_EQ(arr->flat(), (std::vector<unsigned>{2 * mu, 2 * mu - 1, mu, 1, 1, mu, 2 * mu - 1, 2 * mu}));
  }
  EXPECT_FALSE(intersection_array(path3()).has_value());
  // each row sums to the valency and the array is monotone
  for (const auto& g : {hos2(), wells(), hamming_2(5), higman_sims()}) {
    const auto arr = intersection_array(g);
    ASSERT_TRUE(arr);
    EXPECT_TRUE(arr->monotone());
    EXPECT_EQ(arr->c.front(), 1U);
    for (unsigned i = 1; i <= arr->diameter(); ++i) {
      const auto x = intersection_numbers(g, i);
      EXPECT_EQ(x->c + x->a + x->b, arr->valency());
    }
  }
}

TEST(Regularity, SrgParams) {
  EXPECT_EQ(srg_params(gewirtz())->n, 56U);
  const auto m22 = srg_params(m22_graph());
  ASSERT_TRUE(m22);
  EXPECT_EQ((std::array{m22->n, m22->k, m22->a, m22->c}), (std::array{77U, 16U, 0U, 4U}));
  EXPECT_FALSE(srg_params(hamming_2(3)).has_value());
  EXPECT_FALSE(srg_params(complete(5)).has_value());
  for (const auto& g : {petersen(), hoffman_singleton(), higman_sims(), folded_cube(5), complete_bipartite(4, 4)})
    EXPECT_TRUE(srg_params(g)->feasible());
}

TEST(Subgraphs, Induced) {
  const auto hs = hoffman_singleton();
  const auto sub = induced_subgraph(hs, sphere(hs, 0, 2));
  EXPECT_EQ(sub.graph.order(), 42U);
  EXPECT_EQ(sub.graph.valency(), 6U);
  EXPECT_EQ(diameter(sub.graph), 3U);
  EXPECT_EQ(girth(sub.graph), 5U);

  const auto his = higman_sims();
  const auto m22 = induced_subgraph(his, sphere(his, 0, 2)).graph;
  const auto p = srg_params(m22);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->n, 77U);
  EXPECT_EQ(p->k, 16U);

  std::vector<Vertex> all(10);
  std::iota(all.begin(), all.end(), 0U);
  EXPECT_TRUE(induced_subgraph(petersen(), all).graph.same_edges(petersen()));
  EXPECT_EQ(code_of([] { induced_subgraph(petersen(), {}); }), Errc::EmptySet);
}

TEST(Subgraphs, Bipartition) {
  const auto k33 = bipartition(complete_bipartite(3, 3));
  ASSERT_TRUE(k33);
  EXPECT_EQ((*k33)[0].size(), 3U);
  EXPECT_FALSE(bipartition(petersen()).has_value());
  const auto h4 = bipartition(hamming_2(4));
  ASSERT_TRUE(h4);
  for (Vertex v : (*h4)[0]) EXPECT_EQ(std::popcount(v) % 2, 0);
  EXPECT_EQ((*h4)[1].size(), 8U);
}

TEST(EdgeListIo, RoundTrip) {
  const auto g = wells();
  std::stringstream ss;
  write_edge_list(ss, g);
  const auto back = read_edge_list(ss);
  EXPECT_TRUE(back.same_edges(g));
}

TEST(EdgeListIo, ParseErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  EXPECT_EQ(code_of([&] { parse(""); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { parse("3 2\n0 1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { parse("3 1\n0 5\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { parse("3 1\nzero one\n"); }), Errc::ParseError);
  EXPECT_EQ(parse("# comment\n3 1\n\n0 2\n").edge_count(), 1U);
}
