#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "geodex/error.hpp"
#include "geodex/graph.hpp"

namespace geodex {

/// Unordered partition of 0..n-1: orbit blocks, antipodal classes, quotient cells.
/// Normalized so that each cell is ascending and cells are ordered by least element.
struct VertexPartition {
  std::vector<std::vector<Vertex>> cells;

  std::size_t size() const noexcept { return cells.size(); }

  std::size_t point_count() const {
    std::size_t total = 0;
    for (const auto& c : cells) total += c.size();
    return total;
  }

  void normalize() {
    for (auto& c : cells) std::sort(c.begin(), c.end());
    std::erase_if(cells, [](const auto& c) { return c.empty(); });
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  /// cell_of[v] = index of the cell holding v. Throws InvalidPartition unless
  /// the cells are disjoint, nonempty, and cover 0..n-1.
  std::vector<std::size_t> cell_index(std::size_t n) const {
    constexpr auto kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> of(n, kNone);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].empty()) throw Error(Errc::InvalidPartition, "empty cell " + std::to_string(i));
      for (Vertex v : cells[i]) {
        if (v >= n) throw Error(Errc::InvalidPartition, "point " + std::to_string(v) + " out of range");
        if (of[v] != kNone) throw Error(Errc::InvalidPartition, "point " + std::to_string(v) + " in two cells");
        of[v] = i;
      }
    }
    for (std::size_t v = 0; v < n; ++v)
      if (of[v] == kNone) throw Error(Errc::InvalidPartition, "point " + std::to_string(v) + " not covered");
    return of;
  }

  bool uniform() const {
    return std::all_of(cells.begin(), cells.end(), [&](const auto& c) { return c.size() == cells.front().size(); });
  }

  bool operator==(const VertexPartition&) const = default;
};

inline VertexPartition partition_from_labels(const std::vector<std::size_t>& label) {
  std::size_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  VertexPartition p;
  p.cells.resize(count);
  for (std::size_t v = 0; v < label.size(); ++v) p.cells[label[v]].push_back(static_cast<Vertex>(v));
  p.normalize();
  return p;
}

}  // namespace geodex
