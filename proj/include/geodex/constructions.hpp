#pragma once

#include <array>
#include <string>
#include <vector>

#include "geodex/designs.hpp"
#include "geodex/graph.hpp"
#include "geodex/regularity.hpp"

namespace geodex {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InternalVerificationFailed, what);
}

inline void require_srg(const Graph& g, SrgParams want, const std::string& name) {
  const auto got = srg_params(g);
  require(got && *got == want, name + " is not SRG(" + std::to_string(want.n) + "," + std::to_string(want.k) + "," +
                                   std::to_string(want.a) + "," + std::to_string(want.c) + ")");
}

inline void require_array(const Graph& g, const IntersectionArray& want, const std::string& name) {
  const auto got = intersection_array(g);
  require(got && *got == want, name + " does not have intersection array " + want.to_string());
}

inline void param_at_least(std::size_t value, std::size_t min, const char* what) {
  if (value < min)
    throw Error(Errc::ParameterOutOfRange, std::string(what) + " must be at least " + std::to_string(min));
}

inline std::string bits(unsigned x, unsigned width) {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i)
    if (x >> i & 1U) s[i] = '1';
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Elementary families

inline Graph complete(std::size_t n) {
  detail::param_at_least(n, 1, "n");
  return graph_from_predicate(n, [](Vertex, Vertex) { return true; });
}

inline Graph cycle(std::size_t n) {
  detail::param_at_least(n, 3, "cycle length");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return std::move(b).build();
}

/// K_{m,n}: sides 0..m-1 and m..m+n-1.
inline Graph complete_bipartite(std::size_t m, std::size_t n) {
  detail::param_at_least(m, 1, "m");
  detail::param_at_least(n, 1, "n");
  return graph_from_predicate(m + n, [m](Vertex u, Vertex v) { return (u < m) != (v < m); });
}

/// K_{m[b]}: m parts of size b; vertex v lies in part v / b.
inline Graph complete_multipartite(std::size_t m, std::size_t b) {
  detail::param_at_least(m, 1, "m");
  detail::param_at_least(b, 1, "b");
  return graph_from_predicate(m * b, [b](Vertex u, Vertex v) { return u / b != v / b; });
}

/// K_{r,r} minus the perfect matching i ~ r + i.
inline Graph krr_minus_matching(std::size_t r) {
  detail::param_at_least(r, 3, "r");
  return graph_from_predicate(2 * r, [r](Vertex u, Vertex v) { return u < r && v >= r && v - r != u; });
}

/// H(d,2): binary d-tuples (as integers), adjacent when they differ in one coordinate.
inline Graph hamming_2(unsigned d) {
  detail::param_at_least(d, 2, "d");
  const std::size_t n = std::size_t{1} << d;
  GraphBuilder b(n);
  std::vector<std::string> labels;
  for (Vertex x = 0; x < n; ++x) {
    labels.push_back(detail::bits(x, d));
    for (unsigned i = 0; i < d; ++i) b.add_edge(x, x ^ (1U << i));
  }
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

/// Folded d-cube on F_2^{d-1}: x ~ x + e_i and x ~ x + (1,...,1).
inline Graph folded_cube(unsigned d) {
  detail::param_at_least(d, 3, "d");
  const std::size_t n = std::size_t{1} << (d - 1);
  const Vertex all = static_cast<Vertex>(n - 1);
  GraphBuilder b(n);
  std::vector<std::string> labels;
  for (Vertex x = 0; x < n; ++x) {
    labels.push_back(detail::bits(x, d - 1));
    for (unsigned i = 0; i + 1 < d; ++i) b.add_edge(x, x ^ (1U << i));
    b.add_edge(x, x ^ all);
  }
  b.set_labels(std::move(labels));
  Graph g = std::move(b).build();
  detail::require(g.valency() == d, "folded cube has wrong valency");
  return g;
}

/// 2-subsets of {0..4}, adjacent when disjoint.
inline Graph petersen() {
  std::vector<std::array<unsigned, 2>> pairs;
  std::vector<std::string> labels;
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = i + 1; j < 5; ++j) {
      pairs.push_back({i, j});
      labels.push_back("{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
  Graph g = graph_from_predicate(10, [&](Vertex u, Vertex v) {
    const auto& a = pairs[u];
    const auto& b = pairs[v];
    return a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
  });
  g = g.with_labels(std::move(labels));
  detail::require_srg(g, {10, 3, 0, 1}, "Petersen graph");
  return g;
}

/// Generalized Petersen graph GP(10,2): outer 10-cycle u_i, spokes u_i v_i, inner v_i ~ v_{i+2}.
inline Graph dodecahedron() {
  GraphBuilder b(20);
  std::vector<std::string> labels;
  for (Vertex i = 0; i < 10; ++i) {
    b.add_edge(i, (i + 1) % 10);
    b.add_edge(i, 10 + i);
    b.add_edge(10 + i, 10 + (i + 2) % 10);
  }
  for (int i = 0; i < 10; ++i) labels.push_back("u" + std::to_string(i));
  for (int i = 0; i < 10; ++i) labels.push_back("v" + std::to_string(i));
  b.set_labels(std::move(labels));
  Graph g = std::move(b).build();
  detail::require_array(g, {{3, 2, 1, 1, 1}, {1, 1, 1, 2, 3}}, "dodecahedron");
  return g;
}

// ---------------------------------------------------------------------------
// Sporadic strongly regular graphs

/// Pentagons P_h (vertex 5h + j, j ~ j+1) and pentagrams Q_i (vertex 25 + 5i + j,
/// j ~ j+2), with P_h[j] ~ Q_i[h i + j mod 5].
inline Graph hoffman_singleton() {
  GraphBuilder b(50);
  auto P = [](unsigned h, unsigned j) { return static_cast<Vertex>(5 * h + j % 5); };
  auto Q = [](unsigned i, unsigned j) { return static_cast<Vertex>(25 + 5 * i + j % 5); };
  std::vector<std::string> labels(50);
  for (unsigned h = 0; h < 5; ++h)
    for (unsigned j = 0; j < 5; ++j) {
      labels[P(h, j)] = "P" + std::to_string(h) + "." + std::to_string(j);
      labels[Q(h, j)] = "Q" + std::to_string(h) + "." + std::to_string(j);
      b.add_edge(P(h, j), P(h, j + 1));
      b.add_edge(Q(h, j), Q(h, j + 2));
      for (unsigned i = 0; i < 5; ++i) b.add_edge(P(h, j), Q(i, h * i + j));
    }
  b.set_labels(std::move(labels));
  Graph g = std::move(b).build();
  detail::require_srg(g, {50, 7, 0, 1}, "Hoffman-Singleton graph");
  return g;
}

namespace detail {

inline bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

inline std::string block_label(std::size_t index, const std::vector<Vertex>& block) {
  std::string s = "B" + std::to_string(index) + "{";
  for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "," : "") + std::to_string(block[i]);
  return s + "}";
}

}  // namespace detail

/// Blocks of S(3,6,22), adjacent when disjoint.
inline Graph m22_graph() {
  const auto s = witt_22();
  Graph g = graph_from_predicate(77, [&](Vertex u, Vertex v) { return detail::disjoint(s.blocks[u], s.blocks[v]); });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 77; ++i) labels.push_back(detail::block_label(i, s.blocks[i]));
  g = g.with_labels(std::move(labels));
  detail::require_srg(g, {77, 16, 0, 4}, "M22 graph");
  return g;
}

/// The 56 blocks of S(3,6,22) avoiding point 0, adjacent when disjoint.
inline Graph gewirtz() {
  const auto s = witt_22();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    if (std::find(s.blocks[i].begin(), s.blocks[i].end(), 0U) == s.blocks[i].end()) keep.push_back(i);
  Graph g = graph_from_predicate(keep.size(), [&](Vertex u, Vertex v) {
    return detail::disjoint(s.blocks[keep[u]], s.blocks[keep[v]]);
  });
  std::vector<std::string> labels;
  for (auto i : keep) labels.push_back(detail::block_label(i, s.blocks[i]));
  g = g.with_labels(std::move(labels));
  detail::require_srg(g, {56, 10, 0, 2}, "Gewirtz graph");
  return g;
}

/// Vertex 0 = *, 1..22 = points, 23..99 = blocks of S(3,6,22).
/// * ~ points; point ~ block when incident; block ~ block when disjoint.
inline Graph higman_sims() {
  const auto s = witt_22();
  GraphBuilder b(100);
  std::vector<std::string> labels{"*"};
  for (Vertex p = 0; p < 22; ++p) {
    b.add_edge(0, 1 + p);
    labels.push_back("p" + std::to_string(p));
  }
  for (Vertex i = 0; i < 77; ++i) {
    labels.push_back(detail::block_label(i, s.blocks[i]));
    for (Vertex p : s.blocks[i]) b.add_edge(1 + p, 23 + i);
    for (Vertex j = i + 1; j < 77; ++j)
      if (detail::disjoint(s.blocks[i], s.blocks[j])) b.add_edge(23 + i, 23 + j);
  }
  b.set_labels(std::move(labels));
  Graph g = std::move(b).build();
  detail::require_srg(g, {100, 22, 0, 6}, "Higman-Sims graph");
  return g;
}

/// [Γ_2(0)] of the Hoffman–Singleton graph.
inline Graph hos2() {
  const Graph hos = hoffman_singleton();
  Graph g = induced_subgraph(hos, sphere(hos, 0, 2)).graph;
  detail::require(g.order() == 42 && g.valency() == 6, "[HoS]_2 is not 6-regular on 42 vertices");
  detail::require(diameter(g) == 3 && girth(g) == 5, "[HoS]_2 does not have diameter 3 and girth 5");
  return g;
}

/// Wells graph: a double cover of the folded 5-cube. Vertex x + 16 i lies over
/// x in F_2^4 (folded-cube generators e_0..e_3 and 1111).
inline Graph wells() {
  static constexpr std::array<std::array<Vertex, 2>, 80> kEdges{{
      {0, 4},   {0, 15},  {0, 17},  {0, 18},  {0, 24},  {1, 5},   {1, 14},  {1, 16},  {1, 19},  {1, 25},
      {2, 3},   {2, 10},  {2, 13},  {2, 16},  {2, 22},  {3, 11},  {3, 12},  {3, 17},  {3, 23},  {4, 5},
      {4, 12},  {4, 22},  {4, 27},  {5, 13},  {5, 23},  {5, 26},  {6, 9},   {6, 14},  {6, 18},  {6, 20},
      {6, 23},  {7, 8},   {7, 15},  {7, 19},  {7, 21},  {7, 22},  {8, 9},   {8, 12},  {8, 16},  {8, 26},
      {9, 13},  {9, 17},  {9, 27},  {10, 14}, {10, 21}, {10, 24}, {10, 27}, {11, 15}, {11, 20}, {11, 25},
      {11, 26}, {12, 14}, {12, 29}, {13, 15}, {13, 28}, {14, 15}, {16, 20}, {16, 31}, {17, 21}, {17, 30},
      {18, 19}, {18, 26}, {18, 29}, {19, 27}, {19, 28}, {20, 21}, {20, 28}, {21, 29}, {22, 25}, {22, 30},
      {23, 24}, {23, 31}, {24, 25}, {24, 28}, {25, 29}, {26, 30}, {27, 31}, {28, 30}, {29, 31}, {30, 31},
  }};
  GraphBuilder b(32);
  for (const auto& e : kEdges) b.add_edge(e[0], e[1]);
  std::vector<std::string> labels;
  for (unsigned i = 0; i < 32; ++i) labels.push_back(detail::bits(i % 16, 4) + "/" + std::to_string(i / 16));
  b.set_labels(std::move(labels));
  Graph g = std::move(b).build();
  detail::require_array(g, {{5, 4, 1, 1}, {1, 1, 4, 5}}, "Wells graph");
  return g;
}

// ---------------------------------------------------------------------------
// Hadamard graphs, double covers, design incidence graphs

/// Vertices row_i^+ = i, row_i^- = n + i, col_j^+ = 2n + j, col_j^- = 3n + j;
/// row_i^e ~ col_j^d iff H[i][j] = e d.
inline Graph hadamard_graph(const HadamardMatrix& h) {
  if (!h.valid()) throw Error(Errc::InvalidOrder, "matrix is not Hadamard");
  const auto n = h.order;
  GraphBuilder b(4 * n);
  std::vector<std::string> labels(4 * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "r" + std::to_string(i) + "+";
    labels[n + i] = "r" + std::to_string(i) + "-";
    labels[2 * n + i] = "c" + std::to_string(i) + "+";
    labels[3 * n + i] = "c" + std::to_string(i) + "-";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int e : {1, -1})
        for (int d : {1, -1})
          if (h(i, j) == e * d) {
            const auto row = static_cast<Vertex>(e == 1 ? i : n + i);
            const auto col = static_cast<Vertex>(d == 1 ? 2 * n + j : 3 * n + j);
            b.add_edge(row, col);
          }
  b.set_labels(std::move(labels));
  Graph g = std::move(b).build();
  detail::require(bipartition(g).has_value() && g.valency() == n, "Hadamard graph is not bipartite of valency n");
  return g;
}

/// Standard double cover: (x,1) -> x, (x,2) -> x + n; (x,1) ~ (y,2) iff x ~ y.
inline Graph sdc(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  GraphBuilder b(2 * n);
  for (auto [u, v] : g.edges()) {
    b.add_edge(u, n + v);
    b.add_edge(v, n + u);
  }
  std::vector<std::string> labels;
  for (int side = 1; side <= 2; ++side)
    for (Vertex x = 0; x < n; ++x) labels.push_back("(" + g.label(x) + "," + std::to_string(side) + ")");
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

/// Point/block incidence graph: points 0..p-1, block i = vertex p + i.
/// Requires r = lambda m and constant cross-class block intersections; the
/// result is checked to have array (r, r-1, r-lambda, 1; 1, lambda, r-1, r).
/// Throws DesignInvariantViolated, CrossClassIntersectionNotConstant.
inline Graph rgd_incidence_graph(const RgdDesign& d) {
  const auto prm = validate_rgd(d);
  if (prm.r != prm.lambda * prm.m)
    throw Error(Errc::DesignInvariantViolated, "r = " + std::to_string(prm.r) + " but lambda m = " + std::to_string(prm.lambda * prm.m));
  std::vector<std::size_t> par_of(d.blocks.size());
  for (std::size_t p = 0; p < d.parallel_classes.size(); ++p)
    for (auto b : d.parallel_classes[p]) par_of[b] = p;
  for (std::size_t a = 0; a < d.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
      if (par_of[a] == par_of[b]) continue;
      std::size_t common = 0;
      for (Vertex x : d.blocks[a]) common += std::count(d.blocks[b].begin(), d.blocks[b].end(), x);
      if (common != prm.lambda)
        throw Error(Errc::CrossClassIntersectionNotConstant, "blocks " + std::to_string(a) + " and " + std::to_string(b) +
                                                                 " share " + std::to_string(common) + " points, expected " +
                                                                 std::to_string(prm.lambda));
    }
  const auto p = static_cast<Vertex>(d.points);
  GraphBuilder b(d.points + d.blocks.size());
  std::vector<std::string> labels;
  for (Vertex x = 0; x < p; ++x) labels.push_back("x" + std::to_string(x));
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    labels.push_back("B" + std::to_string(i));
    for (Vertex x : d.blocks[i]) b.add_edge(x, p + static_cast<Vertex>(i));
  }
  b.set_labels(std::move(labels));
  Graph g = std::move(b).build();
  const auto r = static_cast<unsigned>(prm.r);
  const auto l = static_cast<unsigned>(prm.lambda);
  detail::require_array(g, {{r, r - 1, r - l, 1}, {1, l, r - 1, r}}, "RGD incidence graph");
  return g;
}

}  // namespace geodex
