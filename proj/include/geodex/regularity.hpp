#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodex/graph.hpp"

namespace geodex {

/// (c_i, a_i, b_i): edges from v ∈ Γ_i(u) back to Γ_{i-1}(u), within Γ_i(u), and out to Γ_{i+1}(u).
struct IntersectionNumbers {
  unsigned level = 0;
  unsigned c = 0;
  unsigned a = 0;
  unsigned b = 0;

  bool operator==(const IntersectionNumbers&) const = default;
};

/// (b_0, ..., b_{d-1}; c_1, ..., c_d).
struct IntersectionArray {
  std::vector<unsigned> b;
  std::vector<unsigned> c;

  unsigned diameter() const noexcept { return static_cast<unsigned>(c.size()); }
  unsigned valency() const noexcept { return b.empty() ? 0 : b.front(); }

  /// a_i = k - b_i - c_i, with b_d = 0.
  unsigned a(unsigned i) const {
    const unsigned bi = i < b.size() ? b[i] : 0;
    const unsigned ci = i == 0 ? 0 : c[i - 1];
    return valency() - bi - ci;
  }

  /// b followed by c, the flat form used in reports.
  std::vector<unsigned> flat() const {
    std::vector<unsigned> out = b;
    out.insert(out.end(), c.begin(), c.end());
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += ";";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  }

  /// c_1 = 1, c nondecreasing, b nonincreasing.
  bool monotone() const {
    if (c.empty() || c.front() != 1) return false;
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] < c[i - 1]) return false;
    for (std::size_t i = 1; i < b.size(); ++i)
      if (b[i] > b[i - 1]) return false;
    return true;
  }

  bool operator==(const IntersectionArray&) const = default;
};

struct SrgParams {
  unsigned n = 0;
  unsigned k = 0;
  unsigned a = 0;
  unsigned c = 0;

  /// k(k - a - 1) = (n - k - 1)c.
  bool feasible() const noexcept {
    return static_cast<long long>(k) * (static_cast<long long>(k) - a - 1) ==
           (static_cast<long long>(n) - k - 1) * static_cast<long long>(c);
  }

  bool operator==(const SrgParams&) const = default;
};

namespace detail {

/// Per-level (c, a, b) seen across all base vertices; `consistent` drops to
/// false as soon as two pairs at that level disagree.
struct LevelProfile {
  std::vector<IntersectionNumbers> numbers;  // index i = level i (level 0 unused)
  std::vector<bool> consistent;
  unsigned diameter = 0;
};

/// Distance layers from `u` as bitsets.
inline std::vector<Bitset> distance_layers(const Graph& g, Vertex u) {
  const auto t = distances_from(g, u);
  std::vector<Bitset> layers;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (t.dist[v] == kUnreachable) throw Error(Errc::Disconnected, "intersection numbers need a connected graph");
    const auto d = static_cast<std::size_t>(t.dist[v]);
    while (layers.size() <= d) layers.emplace_back(g.order());
    layers[d].set(v);
  }
  return layers;
}

inline LevelProfile level_profile(const Graph& g, unsigned max_level) {
  LevelProfile p;
  std::vector<bool> seen;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto layers = distance_layers(g, u);
    const auto ecc = static_cast<unsigned>(layers.size() - 1);
    p.diameter = std::max(p.diameter, ecc);
    const unsigned top = std::min(ecc, max_level);
    if (p.numbers.size() <= top) {
      p.numbers.resize(top + 1);
      p.consistent.resize(top + 1, true);
      seen.resize(top + 1, false);
    }
    const Bitset empty(g.order());
    for (unsigned i = 1; i <= top; ++i) {
      const Bitset& prev = layers[i - 1];
      const Bitset& same = layers[i];
      const Bitset& next = i + 1 < layers.size() ? layers[i + 1] : empty;
      same.for_each([&](std::size_t v) {
        const auto& nb = g.neighbors(static_cast<Vertex>(v));
        const IntersectionNumbers x{i, static_cast<unsigned>(intersection_count(nb, prev)),
                                    static_cast<unsigned>(intersection_count(nb, same)),
                                    static_cast<unsigned>(intersection_count(nb, next))};
        if (!seen[i]) {
          seen[i] = true;
          p.numbers[i] = x;
        } else if (!(p.numbers[i] == x)) {
          p.consistent[i] = false;
        }
      });
    }
  }
  return p;
}

}  // namespace detail

/// Common (c_i, a_i, b_i) over all pairs at distance i; nullopt when the pairs
/// disagree (not well defined). Level 0 is excluded: its row is (-, 0, k).
inline std::optional<IntersectionNumbers> intersection_numbers(const Graph& g, unsigned level) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "intersection numbers need a connected graph");
  if (level == 0 || g.order() == 0) throw Error(Errc::LevelOutOfRange, "level must be at least 1");
  const auto p = detail::level_profile(g, level);
  if (level > p.diameter) throw Error(Errc::LevelOutOfRange, "level " + std::to_string(level) + " exceeds diameter");
  if (!p.consistent[level]) return std::nullopt;
  return p.numbers[level];
}

/// The intersection array, or nullopt if the graph is not distance-regular.
inline std::optional<IntersectionArray> intersection_array(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  if (!is_connected(g)) throw Error(Errc::Disconnected, "intersection array needs a connected graph");
  const auto k = g.valency();
  if (!k) return std::nullopt;
  const auto p = detail::level_profile(g, g.order());
  IntersectionArray arr;
  if (p.diameter > 0) arr.b.push_back(static_cast<unsigned>(*k));
  for (unsigned i = 1; i <= p.diameter; ++i) {
    if (!p.consistent[i]) return std::nullopt;
    arr.c.push_back(p.numbers[i].c);
    if (i < p.diameter) arr.b.push_back(p.numbers[i].b);
  }
  // b_d must vanish from every base vertex, which forces equal eccentricities.
  if (p.numbers[p.diameter].b != 0) return std::nullopt;
  return arr;
}

/// (n, k, a, c), or nullopt unless g is regular of diameter exactly 2 with
/// constant common-neighbour counts on adjacent and on non-adjacent pairs.
/// Complete graphs have no non-adjacent pair to fix c and are reported NOT_SRG.
inline std::optional<SrgParams> srg_params(const Graph& g) {
  const auto n = g.order();
  if (n < 3 || !is_connected(g)) return std::nullopt;
  const auto k = g.valency();
  if (!k) return std::nullopt;
  std::optional<unsigned> a, c;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto common = static_cast<unsigned>(intersection_count(g.neighbors(u), g.neighbors(v)));
      auto& slot = g.adjacent(u, v) ? a : c;
      if (!slot) slot = common;
      else if (*slot != common) return std::nullopt;
    }
  }
  if (!a || !c || *c == 0) return std::nullopt;
  return SrgParams{static_cast<unsigned>(n), static_cast<unsigned>(*k), *a, *c};
}

/// c_2 as a graph-wide constant |Γ(u) ∩ Γ(w)| over d(u, w) = 2, if constant.
inline std::optional<unsigned> constant_c2(const Graph& g) {
  std::optional<unsigned> c2;
  bool any = false;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto t = distances_from(g, u);
    for (Vertex w = u + 1; w < g.order(); ++w) {
      if (t.dist[w] != 2) continue;
      const auto common = static_cast<unsigned>(intersection_count(g.neighbors(u), g.neighbors(w)));
      if (!any) {
        any = true;
        c2 = common;
      } else if (*c2 != common) {
        return std::nullopt;
      }
    }
  }
  return c2;
}

}  // namespace geodex
