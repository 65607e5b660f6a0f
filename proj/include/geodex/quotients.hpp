#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodex/constructions.hpp"
#include "geodex/graph.hpp"
#include "geodex/perm.hpp"
#include "geodex/vertex_partition.hpp"

namespace geodex {

struct QuotientGraph {
  Graph graph;                             // vertex i = cell i
  std::vector<std::size_t> cell_of;        // vertex -> cell
  std::vector<std::size_t> cells_with_internal_edges;
};

/// Cells adjacent iff some edge joins them; loops are dropped and the cells
/// that would carry them are listed. Throws InvalidPartition.
inline QuotientGraph quotient_graph(const Graph& g, const VertexPartition& p) {
  QuotientGraph q;
  q.cell_of = p.cell_index(g.order());
  GraphBuilder b(p.size());
  std::vector<char> internal(p.size(), 0);
  for (auto [u, v] : g.edges()) {
    const auto cu = q.cell_of[u], cv = q.cell_of[v];
    if (cu == cv) internal[cu] = 1;
    else b.add_edge(static_cast<Vertex>(cu), static_cast<Vertex>(cv));
  }
  for (std::size_t c = 0; c < internal.size(); ++c)
    if (internal[c]) q.cells_with_internal_edges.push_back(c);
  std::vector<std::string> labels;
  for (const auto& cell : p.cells) {
    std::string s = "{";
    for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? "," : "") + g.label(cell[i]);
    labels.push_back(s + "}");
  }
  b.set_labels(std::move(labels));
  q.graph = std::move(b).build();
  return q;
}

struct CoverCheck {
  bool is_cover = false;
  /// On failure: vertex v in cell `from` with `count` neighbours in adjacent cell `to`
  /// (or an internal edge when from == to).
  std::optional<Vertex> vertex;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t count = 0;
};

/// Every v in B_i has exactly one neighbour in each cell adjacent to B_i, and
/// none in B_i itself. Throws InvalidPartition.
inline CoverCheck check_cover(const Graph& g, const VertexPartition& p) {
  const auto q = quotient_graph(g, p);
  CoverCheck out;
  std::vector<std::size_t> count(p.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex w : g.neighbor_list(v)) ++count[q.cell_of[w]];
    const auto cv = q.cell_of[v];
    if (count[cv]) {
      out.vertex = v;
      out.from = out.to = cv;
      out.count = count[cv];
      return out;
    }
    for (Vertex c : q.graph.neighbor_list(static_cast<Vertex>(cv)))
      if (count[c] != 1) {
        out.vertex = v;
        out.from = cv;
        out.to = c;
        out.count = count[c];
        return out;
      }
  }
  out.is_cover = true;
  return out;
}

inline bool is_cover(const Graph& g, const VertexPartition& p) { return check_cover(g, p).is_cover; }

/// Classes of "u = v or d(u, v) = diameter" when that relation is an
/// equivalence; nullopt otherwise (NOT_ANTIPODAL).
inline std::optional<VertexPartition> antipodal_partition(const Graph& g) {
  const unsigned d = diameter(g);
  if (d < 2) throw Error(Errc::ParameterOutOfRange, "antipodality needs diameter at least 2");
  const auto n = g.order();
  std::vector<Bitset> cls(n, Bitset(n));
  for (Vertex u = 0; u < n; ++u) {
    const auto t = distances_from(g, u);
    cls[u].set(u);
    for (Vertex v = 0; v < n; ++v)
      if (t.dist[v] == static_cast<std::int32_t>(d)) cls[u].set(v);
  }
  // equivalence iff every member of u's class has the same class
  for (Vertex u = 0; u < n; ++u) {
    bool ok = true;
    cls[u].for_each([&](std::size_t v) { ok = ok && cls[v] == cls[u]; });
    if (!ok) return std::nullopt;
  }
  std::vector<std::size_t> label(n, SIZE_MAX);
  std::size_t next = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (label[u] != SIZE_MAX) continue;
    cls[u].for_each([&](std::size_t v) { label[v] = next; });
    ++next;
  }
  return partition_from_labels(label);
}

struct SdcRecognition {
  bool recognized = false;
  std::string failed_hypothesis;  // set when not recognized
  Graph quotient;                 // antipodal quotient Σ
  VertexPartition blocks;
  /// φ(u) = block(u) + |Σ| * side(u), an isomorphism g -> sdc(Σ)
  std::optional<Permutation> phi;
};

/// Checks connected, bipartite, antipodal with blocks of size 2, odd diameter;
/// then builds φ(u) = (block(u), side(u)) and verifies it is an isomorphism onto sdc(Σ).
inline SdcRecognition recognize_sdc(const Graph& g) {
  SdcRecognition r;
  auto fail = [&](std::string why) {
    r.failed_hypothesis = std::move(why);
    return r;
  };
  if (g.order() == 0 || !is_connected(g)) return fail("not connected");
  const auto sides = bipartition(g);
  if (!sides) return fail("not bipartite");
  const unsigned d = diameter(g);
  if (d % 2 == 0) return fail("diameter " + std::to_string(d) + " is even");
  const auto anti = antipodal_partition(g);
  if (!anti) return fail("not antipodal");
  for (const auto& c : anti->cells)
    if (c.size() != 2) return fail("antipodal block of size " + std::to_string(c.size()));
  r.blocks = *anti;
  auto q = quotient_graph(g, *anti);
  r.quotient = q.graph;
  const auto m = anti->size();
  std::vector<char> side(g.order(), 0);
  for (Vertex v : (*sides)[1]) side[v] = 1;
  std::vector<Vertex> img(g.order());
  for (Vertex u = 0; u < g.order(); ++u) img[u] = static_cast<Vertex>(q.cell_of[u] + (side[u] ? m : 0));
  Permutation phi(std::move(img));
  const Graph target = sdc(r.quotient);
  if (target.edge_count() != g.edge_count()) return fail("φ is not an isomorphism (edge counts differ)");
  for (auto [u, v] : g.edges())
    if (!target.adjacent(phi(u), phi(v))) return fail("φ is not an isomorphism at edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  r.phi = std::move(phi);
  r.recognized = true;
  return r;
}

/// Pairs {(x,1), (x,2)} of a standard double cover built by sdc().
inline VertexPartition sdc_pairing(std::size_t base_order) {
  VertexPartition p;
  for (Vertex x = 0; x < base_order; ++x) p.cells.push_back({x, static_cast<Vertex>(x + base_order)});
  return p;
}

}  // namespace geodex
