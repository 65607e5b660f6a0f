#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "geodex/bitset.hpp"
#include "geodex/error.hpp"

namespace geodex {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
/// Each vertex may carry a human-readable provenance label.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n, Bitset(n)), lists_(n) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }
  const Bitset& neighbors(Vertex v) const noexcept { return adj_[v]; }
  const std::vector<Vertex>& neighbor_list(Vertex v) const noexcept { return lists_[v]; }
  std::size_t degree(Vertex v) const noexcept { return lists_[v].size(); }

  /// Common valency, or nullopt for irregular (and empty) graphs.
  std::optional<std::size_t> valency() const {
    if (adj_.empty()) return std::nullopt;
    const auto k = degree(0);
    for (Vertex v = 1; v < order(); ++v)
      if (degree(v) != k) return std::nullopt;
    return k;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : lists_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

  /// Returns a copy carrying the given labels (one per vertex).
  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != order())
      throw Error(Errc::BadParameter, "label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  bool same_edges(const Graph& other) const { return adj_ == other.adj_; }

 private:
  friend class GraphBuilder;

  std::vector<Bitset> adj_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

/// Accumulates edges, collapsing duplicates, then freezes into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    const auto n = g_.order();
    if (u >= n || v >= n)
      throw Error(Errc::EndpointOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") on " + std::to_string(n) + " vertices");
    if (u == v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
    if (!g_.adj_[u].test(v)) {
      g_.adj_[u].set(v);
      g_.adj_[v].set(u);
      ++g_.edge_count_;
    }
    return *this;
  }

  GraphBuilder& set_labels(std::vector<std::string> labels) {
    labels_ = std::move(labels);
    return *this;
  }

  Graph build() && {
    for (Vertex v = 0; v < g_.order(); ++v) g_.lists_[v] = g_.adj_[v].to_vector();
    if (!labels_.empty()) return std::move(g_).with_labels(std::move(labels_));
    return std::move(g_);
  }

 private:
  Graph g_;
  std::vector<std::string> labels_;
};

inline Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

/// Graph on n vertices where u ~ v iff pred(u, v); pred is queried for u < v.
template <class Pred>
Graph graph_from_predicate(std::size_t n, Pred&& pred) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (pred(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Distances

inline constexpr std::int32_t kUnreachable = -1;
inline constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();

struct DistanceTable {
  Vertex source = 0;
  std::vector<std::int32_t> dist;  // kUnreachable outside the source's component

  std::int32_t operator[](Vertex v) const { return dist[v]; }
  std::int32_t eccentricity() const { return *std::max_element(dist.begin(), dist.end()); }
};

inline DistanceTable distances_from(const Graph& g, Vertex source) {
  if (source >= g.order()) throw Error(Errc::EndpointOutOfRange, "source vertex out of range");
  DistanceTable t{source, std::vector<std::int32_t>(g.order(), kUnreachable)};
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  queue.push_back(source);
  t.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbor_list(u)) {
      if (t.dist[w] == kUnreachable) {
        t.dist[w] = t.dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return t;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto t = distances_from(g, 0);
  return std::none_of(t.dist.begin(), t.dist.end(), [](auto d) { return d == kUnreachable; });
}

/// Maximum distance over all vertex pairs. Throws Disconnected.
inline unsigned diameter(const Graph& g) {
  unsigned best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto t = distances_from(g, v);
    for (auto d : t.dist) {
      if (d == kUnreachable) throw Error(Errc::Disconnected, "diameter of a disconnected graph");
      best = std::max(best, static_cast<unsigned>(d));
    }
  }
  return best;
}

/// Length of a shortest cycle; kInfinite for forests.
inline unsigned girth(const Graph& g) {
  const auto n = g.order();
  unsigned best = kInfinite;
  std::vector<std::int32_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n && best > 3; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = root;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      // Any cycle found past this depth is no shorter than the current best.
      if (best != kInfinite && 2 * static_cast<unsigned>(dist[u]) + 1 >= best) break;
      for (Vertex w : g.neighbor_list(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, static_cast<unsigned>(dist[u] + dist[w] + 1));
        }
      }
    }
  }
  return best;
}

/// Vertices at distance exactly `level` from v, ascending.
inline std::vector<Vertex> sphere(const Graph& g, Vertex v, unsigned level) {
  const auto t = distances_from(g, v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.order(); ++w)
    if (t.dist[w] == static_cast<std::int32_t>(level)) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------
// Subgraphs and bipartitions

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new vertex i came from original[i]
};

/// [S]: the subgraph induced on S, relabeled 0..|S|-1 in ascending order of S.
inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> subset) {
  if (subset.empty()) throw Error(Errc::EmptySet, "induced subgraph of an empty vertex set");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (Vertex v : subset)
    if (v >= g.order()) throw Error(Errc::EndpointOutOfRange, "subset vertex out of range");
  GraphBuilder b(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (g.adjacent(subset[i], subset[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : subset) labels.push_back(g.label(v));
    b.set_labels(std::move(labels));
  }
  return {std::move(b).build(), std::move(subset)};
}

/// Proper 2-colouring; side 0 holds the least vertex of each component.
/// nullopt if an odd cycle exists.
inline std::optional<std::array<std::vector<Vertex>, 2>> bipartition(const Graph& g) {
  const auto n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbor_list(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::array<std::vector<Vertex>, 2> sides;
  for (Vertex v = 0; v < n; ++v) sides[static_cast<std::size_t>(colour[v])].push_back(v);
  return sides;
}

/// Copy of g with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw Error(Errc::BadParameter, "relabeling has wrong size");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  if (!g.labels().empty()) {
    std::vector<std::string> labels(g.order());
    for (Vertex v = 0; v < g.order(); ++v) labels[perm[v]] = g.label(v);
    b.set_labels(std::move(labels));
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Edge-list files: first line "n m", then m lines "u v".

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_labels(std::ostream& out, const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) out << v << ' ' << g.label(v) << '\n';
}

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& dst) {
    while (std::getline(in, dst)) {
      const auto pos = dst.find_first_not_of(" \t\r");
      if (pos != std::string::npos && dst[pos] != '#') return true;
    }
    return false;
  };
  if (!next_line(line)) throw Error(Errc::ParseError, "missing header line");
  long long n = -1, m = -1;
  {
    std::istringstream hdr(line);
    if (!(hdr >> n >> m) || n < 0 || m < 0) throw Error(Errc::ParseError, "bad header: '" + line + "'");
  }
  GraphBuilder b(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) throw Error(Errc::ParseError, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream es(line);
    long long u = -1, v = -1;
    if (!(es >> u >> v) || u < 0 || v < 0) throw Error(Errc::ParseError, "bad edge line: '" + line + "'");
    try {
      b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const Error& e) {
      throw Error(Errc::ParseError, e.what());
    }
  }
  return std::move(b).build();
}

}  // namespace geodex
