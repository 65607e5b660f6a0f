#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "geodex/graph.hpp"

namespace geodex {

/// Pull-style stream of vertex tuples. `next()` advances and returns false at
/// the end; `current()` is valid after a successful `next()`.
template <class S>
concept TupleStream = requires(S s) {
  { s.next() } -> std::same_as<bool>;
  { s.current() } -> std::convertible_to<std::span<const Vertex>>;
};

/// Lazily enumerates s-arcs (no immediate backtracking) or s-geodesics
/// (consecutive adjacency and d(v_0, v_s) = s), in lexicographic order.
/// The graph must outlive the stream.
class WalkStream {
 public:
  enum class Kind { Arc, Geodesic };

  WalkStream(const Graph& g, unsigned s, Kind kind) : g_(&g), s_(s), kind_(kind), path_(s + 1), cursor_(s + 1, 0) {
    if (s == 0) throw Error(Errc::ParameterOutOfRange, "walk length must be at least 1");
  }

  bool next() {
    const auto n = g_->order();
    if (done_) return false;
    // depth_ = number of fixed positions in path_ that are still valid
    if (!started_) {
      started_ = true;
      root_ = 0;
      if (n == 0) return finish();
      start_root();
    } else {
      depth_ = s_;  // resume below the last emitted tuple
    }
    while (true) {
      if (depth_ == 0) {
        if (++root_ >= n) return finish();
        start_root();
        continue;
      }
      if (depth_ == s_ + 1) return true;
      // extend position depth_ from the neighbour list of path_[depth_-1]
      const auto& nbrs = g_->neighbor_list(path_[depth_ - 1]);
      bool advanced = false;
      while (cursor_[depth_] < nbrs.size()) {
        const Vertex w = nbrs[cursor_[depth_]++];
        if (!admissible(w)) continue;
        path_[depth_] = w;
        ++depth_;
        if (depth_ <= s_) cursor_[depth_] = 0;
        advanced = true;
        break;
      }
      if (!advanced) --depth_;
    }
  }

  std::span<const Vertex> current() const { return path_; }
  unsigned length() const noexcept { return s_; }

 private:
  bool finish() {
    done_ = true;
    return false;
  }

  void start_root() {
    path_[0] = root_;
    depth_ = 1;
    cursor_[1] = 0;
    if (kind_ == Kind::Geodesic) dist_ = distances_from(*g_, root_).dist;
  }

  bool admissible(Vertex w) const {
    if (kind_ == Kind::Arc) return depth_ < 2 || w != path_[depth_ - 2];
    return dist_[w] == static_cast<std::int32_t>(depth_);
  }

  const Graph* g_;
  unsigned s_;
  Kind kind_;
  std::vector<Vertex> path_;
  std::vector<std::size_t> cursor_;
  std::vector<std::int32_t> dist_;
  Vertex root_ = 0;
  unsigned depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

inline WalkStream enumerate_s_arcs(const Graph& g, unsigned s) { return {g, s, WalkStream::Kind::Arc}; }
inline WalkStream enumerate_s_geodesics(const Graph& g, unsigned s) { return {g, s, WalkStream::Kind::Geodesic}; }

/// Ordered pairs (u, v) with d(u, v) = s.
class DistancePairStream {
 public:
  DistancePairStream(const Graph& g, unsigned s) : g_(&g), s_(s) {}

  bool next() {
    const auto n = g_->order();
    while (u_ < n) {
      if (!loaded_) {
        dist_ = distances_from(*g_, u_).dist;
        loaded_ = true;
        v_ = 0;
      }
      while (v_ < n) {
        const Vertex v = v_++;
        if (dist_[v] == static_cast<std::int32_t>(s_)) {
          pair_[0] = u_;
          pair_[1] = v;
          return true;
        }
      }
      ++u_;
      loaded_ = false;
    }
    return false;
  }

  std::span<const Vertex> current() const { return pair_; }

 private:
  const Graph* g_;
  unsigned s_;
  Vertex u_ = 0;
  Vertex v_ = 0;
  bool loaded_ = false;
  std::vector<std::int32_t> dist_;
  Vertex pair_[2] = {0, 0};
};

/// Materialized tuples exposed as a stream, for tests and small universes.
class VectorTupleStream {
 public:
  explicit VectorTupleStream(std::vector<std::vector<Vertex>> tuples) : tuples_(std::move(tuples)) {}
  bool next() { return ++pos_ <= tuples_.size(); }
  std::span<const Vertex> current() const { return tuples_[pos_ - 1]; }

 private:
  std::vector<std::vector<Vertex>> tuples_;
  std::size_t pos_ = 0;
};

template <TupleStream S>
std::size_t count_tuples(S stream) {
  std::size_t total = 0;
  while (stream.next()) ++total;
  return total;
}

template <TupleStream S, class F>
void for_each_tuple(S stream, F&& f) {
  while (stream.next()) f(stream.current());
}

}  // namespace geodex
