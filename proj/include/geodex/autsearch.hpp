#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "geodex/bitset.hpp"
#include "geodex/graph.hpp"
#include "geodex/permgroup.hpp"

namespace geodex {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Ordered partition of the vertex set. Cells occupy contiguous ranges of an
/// element array; a cell is named by its start position.
class OrderedPartition {
 public:
  OrderedPartition() = default;

  static OrderedPartition unit(std::size_t n) {
    OrderedPartition p;
    p.init(n);
    if (n) p.len_[0] = static_cast<std::uint32_t>(n);
    return p;
  }

  /// Cells in the given order. Throws InvalidPartition.
  static OrderedPartition from_cells(std::size_t n, const std::vector<std::vector<Vertex>>& cells) {
    VertexPartition check{cells};
    check.cell_index(n);
    OrderedPartition p;
    p.init(n);
    std::uint32_t at = 0;
    for (const auto& cell : cells) {
      const std::uint32_t start = at;
      for (Vertex v : cell) {
        p.elems_[at] = v;
        p.pos_[v] = at++;
        p.start_[v] = start;
      }
      p.len_[start] = static_cast<std::uint32_t>(cell.size());
    }
    p.recount();
    return p;
  }

  std::size_t size() const noexcept { return elems_.size(); }
  std::size_t cell_count() const noexcept { return cells_; }
  bool is_discrete() const noexcept { return cells_ == elems_.size(); }

  std::vector<std::vector<Vertex>> cells() const {
    std::vector<std::vector<Vertex>> out;
    for (std::uint32_t s = 0; s < elems_.size(); s += len_[s]) {
      std::vector<Vertex> c(elems_.begin() + s, elems_.begin() + s + len_[s]);
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Vertices by position; a labeling when the partition is discrete.
  const std::vector<Vertex>& elements() const noexcept { return elems_; }
  std::uint32_t cell_start(Vertex v) const noexcept { return start_[v]; }
  std::uint32_t cell_length(std::uint32_t start) const noexcept { return len_[start]; }

  /// Start of the first smallest non-singleton cell, or size() if discrete.
  std::uint32_t target_cell() const noexcept {
    std::uint32_t best = static_cast<std::uint32_t>(elems_.size());
    std::uint32_t best_len = UINT32_MAX;
    for (std::uint32_t s = 0; s < elems_.size(); s += len_[s])
      if (len_[s] > 1 && len_[s] < best_len) {
        best = s;
        best_len = len_[s];
      }
    return best;
  }

  std::vector<Vertex> cell_members(std::uint32_t start) const {
    std::vector<Vertex> c(elems_.begin() + start, elems_.begin() + start + len_[start]);
    std::sort(c.begin(), c.end());
    return c;
  }

  /// Splits v off the front of its cell; returns the start of the remainder.
  std::uint32_t individualize(Vertex v) {
    const std::uint32_t s = start_[v];
    const std::uint32_t L = len_[s];
    if (L == 1) return s;
    const std::uint32_t other = elems_[s];
    const std::uint32_t pv = pos_[v];
    std::swap(elems_[s], elems_[pv]);
    pos_[other] = pv;
    pos_[v] = s;
    len_[s] = 1;
    len_[s + 1] = L - 1;
    for (std::uint32_t i = s + 1; i < s + L; ++i) start_[elems_[i]] = s + 1;
    ++cells_;
    return s + 1;
  }

 private:
  friend class Refiner;

  void init(std::size_t n) {
    elems_.resize(n);
    pos_.resize(n);
    start_.assign(n, 0);
    len_.assign(n, 0);
    std::iota(elems_.begin(), elems_.end(), Vertex{0});
    std::iota(pos_.begin(), pos_.end(), std::uint32_t{0});
    cells_ = n ? 1 : 0;
  }

  void recount() {
    cells_ = 0;
    for (std::uint32_t s = 0; s < elems_.size(); s += len_[s]) ++cells_;
  }

  std::vector<Vertex> elems_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> start_;  // per vertex
  std::vector<std::uint32_t> len_;    // per cell start
  std::size_t cells_ = 0;
};

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) noexcept {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

}  // namespace detail

/// Equitable refinement by splitter queue. Every split event is folded into a
/// trace hash that depends only on cell positions and counts, so isomorphic
/// inputs produce equal traces.
class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(&g), counts_(g.order()), in_queue_(g.order(), 0), splitter_(g.order()) {}

  /// Refines p in place starting from the given splitter cells; returns the trace.
  std::uint64_t refine(OrderedPartition& p, std::vector<std::uint32_t> queue) {
    const auto n = static_cast<std::uint32_t>(p.size());
    std::uint64_t trace = detail::mix(0, n);
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    for (auto s : queue) in_queue_[s] = 1;
    std::vector<std::uint32_t> frag_start;
    for (std::size_t head = 0; head < queue.size() && p.cells_ < n; ++head) {
      const std::uint32_t w = queue[head];
      in_queue_[w] = 0;
      splitter_.clear();
      for (std::uint32_t i = w; i < w + p.len_[w]; ++i) splitter_.set(p.elems_[i]);
      for (std::uint32_t s = 0; s < n;) {
        const std::uint32_t L = p.len_[s];
        if (L == 1) {
          s += 1;
          continue;
        }
        bool uniform = true;
        for (std::uint32_t i = s; i < s + L; ++i) {
          const Vertex v = p.elems_[i];
          counts_[v] = static_cast<std::uint32_t>(intersection_count(g_->neighbors(v), splitter_));
          if (counts_[v] != counts_[p.elems_[s]]) uniform = false;
        }
        if (uniform) {
          s += L;
          continue;
        }
        std::sort(p.elems_.begin() + s, p.elems_.begin() + s + L,
                  [&](Vertex a, Vertex b) { return counts_[a] < counts_[b] || (counts_[a] == counts_[b] && a < b); });
        trace = detail::mix(trace, (std::uint64_t{s} << 32) | w);
        frag_start.clear();
        for (std::uint32_t i = s; i < s + L; ++i) {
          const Vertex v = p.elems_[i];
          p.pos_[v] = i;
          if (i == s || counts_[v] != counts_[p.elems_[i - 1]]) frag_start.push_back(i);
        }
        frag_start.push_back(s + L);
        const bool was_queued = in_queue_[s] != 0;
        std::uint32_t largest = 0;
        for (std::size_t f = 0; f + 1 < frag_start.size(); ++f) {
          const std::uint32_t fs = frag_start[f];
          const std::uint32_t fl = frag_start[f + 1] - fs;
          p.len_[fs] = fl;
          for (std::uint32_t i = fs; i < fs + fl; ++i) p.start_[p.elems_[i]] = fs;
          trace = detail::mix(trace, (std::uint64_t{counts_[p.elems_[fs]]} << 32) | fl);
          if (fl > frag_start[largest + 1] - frag_start[largest]) largest = static_cast<std::uint32_t>(f);
        }
        p.cells_ += frag_start.size() - 2;
        for (std::size_t f = 0; f + 1 < frag_start.size(); ++f) {
          const std::uint32_t fs = frag_start[f];
          if (in_queue_[fs]) continue;
          if (!was_queued && f == largest) continue;
          in_queue_[fs] = 1;
          queue.push_back(fs);
        }
        s += L;
      }
    }
    for (auto s : queue) in_queue_[s] = 0;
    trace = detail::mix(trace, p.cells_);
    const auto t = p.target_cell();
    trace = detail::mix(trace, (std::uint64_t{t} << 32) | (t < n ? p.len_[t] : 0));
    return trace;
  }

  std::uint64_t refine_all(OrderedPartition& p) {
    std::vector<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < p.size(); s += p.len_[s]) queue.push_back(s);
    return refine(p, std::move(queue));
  }

  /// Individualizes v and refines; returns the trace.
  std::uint64_t individualize(OrderedPartition& p, Vertex v) {
    const std::uint32_t s = p.start_[v];
    p.individualize(v);
    return detail::mix(refine(p, {s}), s);
  }

 private:
  const Graph* g_;
  std::vector<std::uint32_t> counts_;
  std::vector<char> in_queue_;
  Bitset splitter_;
};

/// Coarsest equitable refinement of p.
inline OrderedPartition refine(const Graph& g, const OrderedPartition& p) {
  if (p.size() != g.order()) throw Error(Errc::InvalidPartition, "partition size differs from graph order");
  OrderedPartition q = p;
  Refiner(g).refine_all(q);
  return q;
}

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Known automorphisms used to seed orbit pruning; verified before use.
  std::vector<Permutation> seeds;
};

struct AutomorphismResult {
  PermGroup group;
  std::vector<Vertex> base;  // the first path's individualized vertices
  std::uint64_t nodes = 0;
};

namespace detail {

inline std::vector<Vertex> orbit_labels(std::size_t n, const std::vector<const Permutation*>& gens) {
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto* g : gens)
    for (Vertex x = 0; x < n; ++x) {
      const Vertex a = find(x), b = find((*g)(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (Vertex x = 0; x < n; ++x) parent[x] = find(x);
  return parent;
}

inline bool fixes_all(const Permutation& g, std::span<const Vertex> pts) {
  return std::all_of(pts.begin(), pts.end(), [&](Vertex p) { return g.fixes(p); });
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, const SearchOptions& opt) : g_(g), opt_(opt), refiner_(g) {}

  AutomorphismResult run() {
    const auto n = g_.order();
    for (const auto& s : opt_.seeds)
      if (!is_automorphism(g_, s)) throw Error(Errc::NotAutomorphisms, "seed " + s.to_string() + " is not an automorphism");
    AutomorphismResult out;
    if (n == 0) {
      out.group = PermGroup(0, {}, Bsgs{});
      return out;
    }
    build_first_path();
    const auto k = levels_.size();
    std::vector<Vertex> base;
    for (const auto& lv : levels_) base.push_back(lv.chosen);

    if (!opt_.seeds.empty()) {
      auto seeded = build_bsgs(n, opt_.seeds, base);
      for (auto& s : seeded.strong) gens_.push_back(std::move(s));
    }

    for (std::size_t i = k; i-- > 0;) {
      const auto& lv = levels_[i];
      const std::span<const Vertex> prefix(base.data(), i);
      std::vector<Vertex> failed;
      for (Vertex w : lv.target) {
        if (w == lv.chosen) continue;
        std::vector<const Permutation*> h;
        for (const auto& gen : gens_)
          if (fixes_all(gen, prefix)) h.push_back(&gen);
        const auto orb = orbit_labels(n, h);
        if (orb[w] == orb[lv.chosen]) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](Vertex f) { return orb[f] == orb[w]; })) continue;
        OrderedPartition child = lv.part;
        const auto t = step(child, w);
        Permutation found;
        std::vector<Vertex> path(prefix.begin(), prefix.end());
        path.push_back(w);
        if (t == traces_[i + 1] && match(child, i + 1, path, found)) gens_.push_back(std::move(found));
        else failed.push_back(w);
      }
    }

    out.base = base;
    out.nodes = nodes_;
    // drop duplicates and identities before building the chain
    std::vector<Permutation> uniq;
    for (auto& gen : gens_)
      if (!gen.is_identity() && std::find(uniq.begin(), uniq.end(), gen) == uniq.end()) uniq.push_back(gen);
    auto chain = build_bsgs(n, uniq, base);
    out.group = PermGroup(n, std::move(uniq), std::move(chain));
    return out;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct Level {
    OrderedPartition part;  // refined, before individualization
    std::vector<Vertex> target;
    Vertex chosen = 0;
  };

  std::uint64_t step(OrderedPartition& p, Vertex v) {
    if (++nodes_ > opt_.node_budget)
      throw Error(Errc::BudgetExceeded, "search exceeded " + std::to_string(opt_.node_budget) + " nodes");
    return refiner_.individualize(p, v);
  }

  void build_first_path() {
    OrderedPartition p = OrderedPartition::unit(g_.order());
    ++nodes_;
    traces_.push_back(refiner_.refine_all(p));
    while (!p.is_discrete()) {
      Level lv;
      lv.part = p;
      lv.target = p.cell_members(p.target_cell());
      lv.chosen = lv.target.front();
      traces_.push_back(step(p, lv.chosen));
      levels_.push_back(std::move(lv));
    }
    leaf_ = p.elements();
  }

  /// Looks below p (depth d, trace already equal to the first path) for a leaf
  /// whose labeling, composed with the first leaf's, is an automorphism.
  bool match(const OrderedPartition& p, std::size_t d, std::vector<Vertex>& path, Permutation& found) {
    const auto n = g_.order();
    if (p.is_discrete()) {
      std::vector<Vertex> img(n);
      for (std::size_t i = 0; i < n; ++i) img[leaf_[i]] = p.elements()[i];
      Permutation pi(std::move(img));
      if (!is_automorphism(g_, pi)) return false;
      found = std::move(pi);
      return true;
    }
    if (d >= levels_.size()) return false;
    const auto cell = p.cell_members(p.target_cell());
    std::vector<const Permutation*> h;
    for (const auto& gen : gens_)
      if (fixes_all(gen, path)) h.push_back(&gen);
    const auto orb = orbit_labels(n, h);
    std::vector<Vertex> failed;
    for (Vertex w : cell) {
      if (std::any_of(failed.begin(), failed.end(), [&](Vertex f) { return orb[f] == orb[w]; })) continue;
      OrderedPartition child = p;
      const auto t = step(child, w);
      if (t == traces_[d + 1]) {
        path.push_back(w);
        const bool ok = match(child, d + 1, path, found);
        path.pop_back();
        if (ok) return true;
      }
      failed.push_back(w);
    }
    return false;
  }

  const Graph& g_;
  const SearchOptions& opt_;
  Refiner refiner_;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> traces_;  // traces_[d] = trace at depth d of the first path
  std::vector<Vertex> leaf_;
  std::vector<Permutation> gens_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Full automorphism group by individualization–refinement with orbit pruning.
/// Throws BudgetExceeded, NotAutomorphisms (bad seeds).
inline AutomorphismResult automorphism_search(const Graph& g, const SearchOptions& opt = {}) {
  return detail::AutomorphismSearch(g, opt).run();
}

inline PermGroup automorphism_group(const Graph& g, const SearchOptions& opt = {}) {
  return automorphism_search(g, opt).group;
}

// ---------------------------------------------------------------------------
// Canonical form

struct Certificate {
  std::size_t n = 0;
  std::vector<Edge> edges;           // edge set under the canonical labeling, sorted
  std::uint64_t invariant_hash = 0;  // hash of the winning trace sequence
  std::vector<Vertex> labeling;      // labeling[i] = vertex placed at canonical position i

  bool operator==(const Certificate& o) const {
    return n == o.n && invariant_hash == o.invariant_hash && edges == o.edges;
  }
};

namespace detail {

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, const PermGroup& aut, std::uint64_t budget)
      : g_(g), aut_(aut), budget_(budget), refiner_(g) {}

  Certificate run() {
    const auto n = g_.order();
    OrderedPartition p = OrderedPartition::unit(n);
    std::vector<std::uint64_t> trace{refiner_.refine_all(p)};
    dfs(p, trace, aut_.generators());
    Certificate c;
    c.n = n;
    c.edges = best_code_;
    c.labeling = best_lab_;
    std::uint64_t h = 0;
    for (auto t : best_trace_) h = mix(h, t);
    c.invariant_hash = h;
    return c;
  }

 private:
  std::vector<Edge> code(const std::vector<Vertex>& lab) const {
    std::vector<Vertex> pos(lab.size());
    for (std::size_t i = 0; i < lab.size(); ++i) pos[lab[i]] = static_cast<Vertex>(i);
    std::vector<Edge> e;
    e.reserve(g_.edge_count());
    for (auto [u, v] : g_.edges()) {
      auto a = pos[u], b = pos[v];
      if (a > b) std::swap(a, b);
      e.emplace_back(a, b);
    }
    std::sort(e.begin(), e.end());
    return e;
  }

  /// -1, 0, +1 comparing the trace prefix with the best leaf's trace.
  int compare_prefix(const std::vector<std::uint64_t>& t) const {
    const auto m = std::min(t.size(), best_trace_.size());
    for (std::size_t i = 0; i < m; ++i)
      if (t[i] != best_trace_[i]) return t[i] < best_trace_[i] ? -1 : 1;
    return 0;
  }

  void dfs(const OrderedPartition& p, std::vector<std::uint64_t>& trace, const std::vector<Permutation>& stab) {
    if (++nodes_ > budget_) throw Error(Errc::BudgetExceeded, "canonical search exceeded " + std::to_string(budget_) + " nodes");
    if (have_best_ && compare_prefix(trace) < 0) return;
    if (p.is_discrete()) {
      auto c = code(p.elements());
      const int cmp = have_best_ ? compare_prefix(trace) : 1;
      bool better = !have_best_ || cmp > 0 || (cmp == 0 && trace.size() > best_trace_.size());
      if (!better && cmp == 0 && trace.size() == best_trace_.size()) better = c > best_code_;
      if (better) {
        have_best_ = true;
        best_trace_ = trace;
        best_code_ = std::move(c);
        best_lab_ = p.elements();
      }
      return;
    }
    const auto n = g_.order();
    const auto cell = p.cell_members(p.target_cell());
    std::vector<const Permutation*> h;
    for (const auto& s : stab) h.push_back(&s);
    const auto orb = orbit_labels(n, h);
    std::vector<bool> done(n, false);
    for (Vertex w : cell) {
      if (done[orb[w]]) continue;
      done[orb[w]] = true;
      OrderedPartition child = p;
      trace.push_back(refiner_.individualize(child, w));
      std::vector<Permutation> child_stab;
      if (!stab.empty()) {
        const Vertex pt[] = {w};
        child_stab = build_bsgs(n, stab, pt).tail(1).strong;
      }
      dfs(child, trace, child_stab);
      trace.pop_back();
    }
  }

  const Graph& g_;
  const PermGroup& aut_;
  std::uint64_t budget_;
  Refiner refiner_;
  std::uint64_t nodes_ = 0;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_trace_;
  std::vector<Edge> best_code_;
  std::vector<Vertex> best_lab_;
};

}  // namespace detail

/// Canonical certificate; `aut` (if given) must be Aut(g) and is used for pruning.
inline Certificate canonical_certificate(const Graph& g, const std::optional<PermGroup>& aut = std::nullopt,
                                         std::uint64_t node_budget = kDefaultNodeBudget) {
  SearchOptions opt;
  opt.node_budget = node_budget;
  const PermGroup group = aut ? *aut : automorphism_group(g, opt);
  return detail::CanonicalSearch(g, group, node_budget).run();
}

/// An isomorphism g1 -> g2 (as a permutation of 0..n-1), or nullopt.
inline std::optional<Permutation> find_isomorphism(const Graph& g1, const Graph& g2,
                                                   std::uint64_t node_budget = kDefaultNodeBudget) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g1) != degrees(g2)) return std::nullopt;
  const auto c1 = canonical_certificate(g1, std::nullopt, node_budget);
  const auto c2 = canonical_certificate(g2, std::nullopt, node_budget);
  if (!(c1 == c2)) return std::nullopt;
  std::vector<Vertex> img(g1.order());
  for (std::size_t i = 0; i < img.size(); ++i) img[c1.labeling[i]] = c2.labeling[i];
  Permutation phi(std::move(img));
  for (auto [u, v] : g1.edges())
    if (!g2.adjacent(phi(u), phi(v))) throw Error(Errc::InternalVerificationFailed, "certificate map is not an isomorphism");
  return phi;
}

inline bool are_isomorphic(const Graph& g1, const Graph& g2, std::uint64_t node_budget = kDefaultNodeBudget) {
  return find_isomorphism(g1, g2, node_budget).has_value();
}

}  // namespace geodex
