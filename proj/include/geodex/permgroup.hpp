#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "geodex/error.hpp"
#include "geodex/perm.hpp"
#include "geodex/vertex_partition.hpp"

namespace geodex {

using GroupOrder = std::uint64_t;

inline GroupOrder checked_mul(GroupOrder a, GroupOrder b) {
  GroupOrder r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "group order exceeds 64 bits");
  return r;
}

/// One level of a stabilizer chain: the orbit of `base_point` under the
/// strong generators fixing all earlier base points, with a transversal.
struct BsgsLevel {
  Vertex base_point = 0;
  std::vector<std::size_t> gens;  // indices into Bsgs::strong
  std::vector<Vertex> orbit;
  std::vector<std::int32_t> slot;  // point -> index into orbit, or -1
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inv;

  bool in_orbit(Vertex x) const noexcept { return slot[x] >= 0; }
};

/// Base and strong generating set. Group order is the product of the
/// fundamental orbit sizes; membership is exact via sifting.
class Bsgs {
 public:
  std::size_t degree = 0;
  std::vector<Vertex> base;
  std::vector<Permutation> strong;
  std::vector<BsgsLevel> levels;

  /// Order of the pointwise stabilizer of the first `depth` base points.
  GroupOrder order(std::size_t depth = 0) const {
    GroupOrder total = 1;
    for (std::size_t i = depth; i < levels.size(); ++i) total = checked_mul(total, levels[i].orbit.size());
    return total;
  }

  /// Sifts g from level `start`; returns the residue and the level at which
  /// sifting stopped (levels.size() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t start = 0) const {
    for (std::size_t l = start; l < levels.size(); ++l) {
      const auto& lv = levels[l];
      const Vertex beta = g(lv.base_point);
      if (!lv.in_orbit(beta)) return {std::move(g), l};
      g = g * lv.transversal_inv[static_cast<std::size_t>(lv.slot[beta])];
    }
    return {std::move(g), levels.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree) return false;
    auto [residue, level] = strip(g);
    return level == levels.size() && residue.is_identity();
  }

  /// Strong generators fixing the first `depth` base points; they generate that stabilizer.
  std::vector<Permutation> stabilizer_generators(std::size_t depth) const {
    if (depth >= levels.size()) return {};
    std::vector<Permutation> out;
    for (auto idx : levels[depth].gens) out.push_back(strong[idx]);
    return out;
  }

  /// The chain for the stabilizer of the first `depth` base points.
  Bsgs tail(std::size_t depth) const {
    Bsgs t;
    t.degree = degree;
    if (depth >= levels.size()) return t;
    std::vector<std::int64_t> remap(strong.size(), -1);
    for (auto idx : levels[depth].gens) {
      remap[idx] = static_cast<std::int64_t>(t.strong.size());
      t.strong.push_back(strong[idx]);
    }
    for (std::size_t l = depth; l < levels.size(); ++l) {
      BsgsLevel lv = levels[l];
      for (auto& idx : lv.gens) idx = static_cast<std::size_t>(remap[idx]);
      t.base.push_back(lv.base_point);
      t.levels.push_back(std::move(lv));
    }
    return t;
  }
};

namespace detail {

inline void rebuild_level(const std::vector<Permutation>& strong, BsgsLevel& lv, std::size_t degree) {
  lv.orbit.assign(1, lv.base_point);
  lv.slot.assign(degree, -1);
  lv.slot[lv.base_point] = 0;
  lv.transversal.assign(1, Permutation(degree));
  lv.transversal_inv.assign(1, Permutation(degree));
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    const Vertex beta = lv.orbit[head];
    for (auto idx : lv.gens) {
      const auto& s = strong[idx];
      const Vertex img = s(beta);
      if (lv.slot[img] >= 0) continue;
      lv.slot[img] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(img);
      Permutation u = lv.transversal[head] * s;
      lv.transversal_inv.push_back(u.inverse());
      lv.transversal.push_back(std::move(u));
    }
  }
}

/// Greedy base extension: the point moved by g with the longest g-cycle
/// (smallest point on ties).
inline Vertex choose_base_point(const Permutation& g) {
  Vertex best = 0;
  std::size_t best_len = 0;
  for (const auto& cyc : g.cycles()) {
    const Vertex lo = *std::min_element(cyc.begin(), cyc.end());
    if (cyc.size() > best_len || (cyc.size() == best_len && lo < best)) {
      best_len = cyc.size();
      best = lo;
    }
  }
  return best;
}

}  // namespace detail

/// Deterministic Schreier–Sims. `base_prefix` fixes the first base points,
/// so the chain exposes the stabilizer of that sequence.
inline Bsgs build_bsgs(std::size_t degree, std::span<const Permutation> gens, std::span<const Vertex> base_prefix = {}) {
  Bsgs b;
  b.degree = degree;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw Error(Errc::DegreeMismatch, "generator degree differs from group degree");
    if (!g.is_identity() && std::find(b.strong.begin(), b.strong.end(), g) == b.strong.end()) b.strong.push_back(g);
  }
  for (Vertex p : base_prefix) {
    if (p >= degree) throw Error(Errc::ParameterOutOfRange, "base point out of range");
    if (std::find(b.base.begin(), b.base.end(), p) == b.base.end()) b.base.push_back(p);
  }
  for (const auto& g : b.strong) {
    const bool moves_base = std::any_of(b.base.begin(), b.base.end(), [&](Vertex p) { return !g.fixes(p); });
    if (!moves_base) b.base.push_back(detail::choose_base_point(g));
  }

  auto fixes_prefix = [&](const Permutation& g, std::size_t depth) {
    for (std::size_t j = 0; j < depth; ++j)
      if (!g.fixes(b.base[j])) return false;
    return true;
  };
  b.levels.resize(b.base.size());
  for (std::size_t i = 0; i < b.base.size(); ++i) {
    b.levels[i].base_point = b.base[i];
    for (std::size_t idx = 0; idx < b.strong.size(); ++idx)
      if (fixes_prefix(b.strong[idx], i)) b.levels[i].gens.push_back(idx);
    detail::rebuild_level(b.strong, b.levels[i], degree);
  }

  // Work from the deepest level up; a failed Schreier generator sinks a new
  // strong generator and resumes at the level where it stopped.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(b.levels.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < b.levels[li].orbit.size() && !restart; ++oi) {
      const Vertex beta = b.levels[li].orbit[oi];
      const auto gens_here = b.levels[li].gens;
      for (auto idx : gens_here) {
        const auto& s = b.strong[idx];
        const auto& lv = b.levels[li];
        const Vertex img = s(beta);
        Permutation h = lv.transversal[oi] * s * lv.transversal_inv[static_cast<std::size_t>(lv.slot[img])];
        if (h.is_identity()) continue;
        auto [residue, stop] = b.strip(std::move(h), li + 1);
        if (stop == b.levels.size() && residue.is_identity()) continue;
        const std::size_t new_idx = b.strong.size();
        if (stop == b.levels.size()) {
          const Vertex p = detail::choose_base_point(residue);
          b.base.push_back(p);
          b.levels.emplace_back();
          b.levels.back().base_point = p;
        }
        b.strong.push_back(std::move(residue));
        for (std::size_t l = li + 1; l <= stop; ++l) {
          b.levels[l].gens.push_back(new_idx);
          detail::rebuild_level(b.strong, b.levels[l], degree);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
  return b;
}

/// Finitely generated permutation group, optionally carrying a BSGS.
/// Immutable; copies share the chain.
class PermGroup {
 public:
  PermGroup() = default;

  PermGroup(std::size_t degree, std::vector<Permutation> gens) : degree_(degree), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw Error(Errc::DegreeMismatch, "generators must share the group degree");
  }

  PermGroup(std::size_t degree, std::vector<Permutation> gens, Bsgs chain) : PermGroup(degree, std::move(gens)) {
    chain_ = std::make_shared<const Bsgs>(std::move(chain));
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  bool has_bsgs() const noexcept { return chain_ != nullptr; }

  const Bsgs& bsgs() const {
    if (!chain_) throw Error(Errc::ParameterOutOfRange, "group has no base and strong generating set");
    return *chain_;
  }

  GroupOrder order() const { return bsgs().order(); }
  bool contains(const Permutation& g) const { return bsgs().contains(g); }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::shared_ptr<const Bsgs> chain_;
};

/// Group generated by `gens`, with a deterministic BSGS. Throws DegreeMismatch.
inline PermGroup schreier_sims(std::vector<Permutation> gens, std::span<const Vertex> base_prefix = {}) {
  if (gens.empty()) throw Error(Errc::ParameterOutOfRange, "schreier_sims needs at least one generator");
  const auto degree = gens.front().degree();
  auto chain = build_bsgs(degree, gens, base_prefix);
  return PermGroup(degree, std::move(gens), std::move(chain));
}

/// `group` itself if it already has a chain, otherwise a copy with one.
inline PermGroup with_bsgs(const PermGroup& group) {
  if (group.has_bsgs()) return group;
  return PermGroup(group.degree(), group.generators(), build_bsgs(group.degree(), group.generators()));
}

inline GroupOrder group_order(const PermGroup& group) { return with_bsgs(group).order(); }

inline std::vector<Vertex> orbit(const PermGroup& group, Vertex point) {
  if (point >= group.degree()) throw Error(Errc::ParameterOutOfRange, "point out of range");
  std::vector<bool> seen(group.degree(), false);
  std::vector<Vertex> out{point};
  seen[point] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& g : group.generators()) {
      const Vertex y = g(out[head]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexPartition orbit_partition(const PermGroup& group) {
  const auto n = group.degree();
  std::vector<std::size_t> label(n, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (Vertex p = 0; p < n; ++p) {
    if (label[p] != static_cast<std::size_t>(-1)) continue;
    for (Vertex q : orbit(group, p)) label[q] = next;
    ++next;
  }
  return partition_from_labels(label);
}

inline bool is_transitive(const PermGroup& group) {
  return group.degree() == 0 || orbit(group, 0).size() == group.degree();
}

/// G_v, with its own chain.
inline PermGroup stabilizer(const PermGroup& group, Vertex v) {
  if (v >= group.degree()) throw Error(Errc::ParameterOutOfRange, "point out of range");
  const Vertex prefix[] = {v};
  const Bsgs full = (group.has_bsgs() && !group.bsgs().base.empty() && group.bsgs().base.front() == v)
                        ? group.bsgs()
                        : build_bsgs(group.degree(), group.generators(), prefix);
  auto chain = full.tail(1);
  auto gens = chain.strong;
  return PermGroup(group.degree(), std::move(gens), std::move(chain));
}

/// Pointwise stabilizer of a sequence of points.
inline PermGroup pointwise_stabilizer(const PermGroup& group, std::span<const Vertex> points) {
  std::vector<Vertex> prefix;
  for (Vertex p : points)
    if (std::find(prefix.begin(), prefix.end(), p) == prefix.end()) prefix.push_back(p);
  const auto full = build_bsgs(group.degree(), group.generators(), prefix);
  // The chain may place extra points after the prefix; only the prefix counts.
  auto chain = full.tail(prefix.size());
  auto gens = chain.strong;
  return PermGroup(group.degree(), std::move(gens), std::move(chain));
}

// ---------------------------------------------------------------------------
// Blocks and primitivity

/// Finest G-invariant partition with `a` and `b` in one block (Atkinson's
/// union–find closure). Throws NotTransitive.
inline VertexPartition minimal_block_system(const PermGroup& group, Vertex a, Vertex b) {
  const auto n = group.degree();
  if (a >= n || b >= n) throw Error(Errc::ParameterOutOfRange, "point out of range");
  if (!is_transitive(group)) throw Error(Errc::NotTransitive, "block systems need a transitive group");
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Vertex, Vertex>> queue;
  auto unite = [&](Vertex x, Vertex y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    queue.emplace_back(x, y);
  };
  unite(a, b);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [x, y] = queue[head];
    for (const auto& g : group.generators()) unite(g(x), g(y));
  }
  std::vector<std::size_t> label(n);
  for (Vertex v = 0; v < n; ++v) label[v] = find(v);
  // compress roots to consecutive labels
  std::vector<std::size_t> compact(n, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (compact[label[v]] == static_cast<std::size_t>(-1)) compact[label[v]] = next++;
    label[v] = compact[label[v]];
  }
  return partition_from_labels(label);
}

inline bool is_primitive(const PermGroup& group) {
  if (!is_transitive(group)) throw Error(Errc::NotTransitive, "primitivity needs a transitive group");
  const auto n = group.degree();
  for (Vertex b = 1; b < n; ++b)
    if (minimal_block_system(group, 0, b).size() != 1) return false;
  return true;
}

struct InducedAction {
  PermGroup image;              // acting on 0..|points|-1
  std::vector<Vertex> points;   // image point i is original points[i]
  GroupOrder kernel_order = 1;
  bool faithful = true;
};

/// Action induced on an invariant set S, with the kernel order |G| / |G^S|.
/// Throws SetNotInvariant.
inline InducedAction action_on_set(const PermGroup& group, std::vector<Vertex> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const auto n = group.degree();
  std::vector<std::int32_t> index(n, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n) throw Error(Errc::ParameterOutOfRange, "point out of range");
    index[subset[i]] = static_cast<std::int32_t>(i);
  }
  std::vector<Permutation> images;
  for (const auto& g : group.generators()) {
    std::vector<Vertex> img(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const auto j = index[g(subset[i])];
      if (j < 0) throw Error(Errc::SetNotInvariant, "generator " + g.to_string() + " moves the set");
      img[i] = static_cast<Vertex>(j);
    }
    Permutation p(std::move(img));
    if (!p.is_identity() && std::find(images.begin(), images.end(), p) == images.end()) images.push_back(std::move(p));
  }
  InducedAction out;
  out.points = subset;
  auto chain = build_bsgs(subset.size(), images);
  out.image = PermGroup(subset.size(), std::move(images), std::move(chain));
  const auto full = group_order(group);
  out.kernel_order = full / out.image.order();
  out.faithful = out.kernel_order == 1;
  return out;
}

inline bool is_two_transitive(const PermGroup& group) {
  if (!is_transitive(group)) throw Error(Errc::NotTransitive, "2-transitivity needs a transitive group");
  const auto n = group.degree();
  if (n <= 1) return true;
  const auto stab = stabilizer(group, 0);
  return orbit(stab, 1).size() == n - 1;
}

/// Transitive, and the point stabilizer is primitive on the remaining points.
inline bool is_two_primitive(const PermGroup& group) {
  if (!is_transitive(group)) throw Error(Errc::NotTransitive, "2-primitivity needs a transitive group");
  const auto n = group.degree();
  if (n <= 2) return true;
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), Vertex{1});
  const auto local = action_on_set(stabilizer(group, 0), rest);
  if (!is_transitive(local.image)) return false;
  return is_primitive(local.image);
}

/// Largest k such that the group is k-transitive (0 if intransitive).
inline unsigned transitivity_degree(const PermGroup& group) {
  const auto n = group.degree();
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  const auto chain = build_bsgs(n, group.generators(), all);
  for (unsigned j = 0; j < n; ++j) {
    if (chain.levels[j].orbit.size() != n - j) return j;
  }
  return static_cast<unsigned>(n);
}

}  // namespace geodex
