#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodex/autsearch.hpp"
#include "geodex/permgroup.hpp"
#include "geodex/regularity.hpp"
#include "geodex/tuple_orbit.hpp"
#include "geodex/walks.hpp"

namespace geodex {

/// Throws NotAutomorphisms naming the first generator that breaks an edge.
inline void require_automorphisms(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.order()) throw Error(Errc::NotAutomorphisms, "group degree differs from graph order");
  for (const auto& p : group.generators()) {
    for (auto [u, v] : g.edges())
      if (!g.adjacent(p(u), p(v)))
        throw Error(Errc::NotAutomorphisms, "generator " + p.to_string() + " maps edge {" + std::to_string(u) + "," +
                                                std::to_string(v) + "} to a non-edge");
  }
}

inline bool is_vertex_transitive(const Graph& g, const PermGroup& group) {
  require_automorphisms(g, group);
  return g.order() == 0 || orbit(group, 0).size() == g.order();
}

enum class TransitivityMode { Arc, Geodesic, Distance };

inline std::string to_string(TransitivityMode m) {
  switch (m) {
    case TransitivityMode::Arc: return "arc";
    case TransitivityMode::Geodesic: return "geodesic";
    case TransitivityMode::Distance: return "distance";
  }
  return "?";
}

inline TransitivityMode parse_mode(const std::string& s) {
  if (s == "arc") return TransitivityMode::Arc;
  if (s == "geodesic") return TransitivityMode::Geodesic;
  if (s == "distance") return TransitivityMode::Distance;
  throw Error(Errc::BadParameter, "unknown mode '" + s + "' (arc, geodesic, distance)");
}

struct TransitivityLevel {
  unsigned s = 0;
  std::size_t tuple_count = 0;
  std::size_t orbit_size = 0;
  bool covers = false;
  std::vector<Vertex> seed;                    // empty when there are no tuples
  std::optional<std::vector<Vertex>> witness;  // a tuple outside the seed's orbit
};

struct TransitivityReport {
  TransitivityMode mode = TransitivityMode::Geodesic;
  unsigned requested = 0;
  unsigned max_s = 0;  // largest s with every level 1..s transitive
  std::vector<TransitivityLevel> per_s;

  bool transitive_through(unsigned s) const noexcept { return max_s >= s; }
};

namespace detail {

template <TupleStream S>
TransitivityLevel level_check(const PermGroup& group, unsigned s, S stream, std::size_t budget) {
  TransitivityLevel lv;
  lv.s = s;
  S probe = stream;
  if (!probe.next()) {
    lv.covers = true;  // no tuples: vacuous
    return lv;
  }
  lv.seed.assign(probe.current().begin(), probe.current().end());
  auto r = tuple_orbit(group, lv.seed, std::move(stream), budget);
  lv.tuple_count = r.universe_size;
  lv.orbit_size = r.orbit_size;
  lv.covers = r.covers;
  lv.witness = std::move(r.witness);
  return lv;
}

}  // namespace detail

/// Levels 1..s_max, stopping at the first level that is not transitive. The
/// seed at each level is the lexicographically least tuple.
/// Throws NotAutomorphisms, TupleBudgetExceeded.
inline TransitivityReport transitivity(const Graph& g, const PermGroup& group, TransitivityMode mode, unsigned s_max,
                                       std::size_t budget = kDefaultTupleBudget) {
  require_automorphisms(g, group);
  if (!is_connected(g)) throw Error(Errc::Disconnected, "transitivity needs a connected graph");
  TransitivityReport rep;
  rep.mode = mode;
  rep.requested = s_max;
  for (unsigned s = 1; s <= s_max; ++s) {
    TransitivityLevel lv;
    switch (mode) {
      case TransitivityMode::Arc: lv = detail::level_check(group, s, enumerate_s_arcs(g, s), budget); break;
      case TransitivityMode::Geodesic: lv = detail::level_check(group, s, enumerate_s_geodesics(g, s), budget); break;
      case TransitivityMode::Distance: lv = detail::level_check(group, s, DistancePairStream(g, s), budget); break;
    }
    const bool ok = lv.covers;
    rep.per_s.push_back(std::move(lv));
    if (!ok) break;
    rep.max_s = s;
  }
  return rep;
}

inline bool is_geodesic_transitive(const Graph& g, const PermGroup& group, std::size_t budget = kDefaultTupleBudget) {
  const unsigned d = diameter(g);
  return transitivity(g, group, TransitivityMode::Geodesic, d, budget).max_s == d;
}

/// |G| / |G_(t_0, ..., t_s)|, the size of the orbit of a tuple, by chained stabilizers.
inline GroupOrder tuple_orbit_size_by_stabilizers(const PermGroup& group, std::span<const Vertex> tuple) {
  const auto stab = pointwise_stabilizer(group, tuple);
  return group_order(group) / stab.order();
}

// ---------------------------------------------------------------------------
// Local action

struct LocalAction {
  Vertex u = 0;
  std::size_t degree = 0;
  InducedAction action;
  GroupOrder image_order = 1;
  bool transitive = false;
  bool two_transitive = false;
  bool primitive = false;
  bool two_primitive = false;
  unsigned transitivity_degree = 0;
};

/// G_u acting on Γ(u). Throws NotTransitive unless G is vertex-transitive.
inline LocalAction local_action(const Graph& g, const PermGroup& group, Vertex u) {
  if (!is_vertex_transitive(g, group)) throw Error(Errc::NotTransitive, "local action needs a vertex-transitive group");
  LocalAction la;
  la.u = u;
  la.degree = g.degree(u);
  la.action = action_on_set(stabilizer(with_bsgs(group), u), g.neighbor_list(u));
  const auto& img = la.action.image;
  la.image_order = img.order();
  la.transitive = is_transitive(img);
  la.transitivity_degree = ::geodex::transitivity_degree(img);
  if (la.transitive) {
    la.two_transitive = is_two_transitive(img);
    la.primitive = is_primitive(img);
    la.two_primitive = is_two_primitive(img);
  }
  return la;
}

// ---------------------------------------------------------------------------
// b_2 <= 1 / b_3 <= 1 forcing

struct ForcingReport {
  std::optional<unsigned> b2;
  std::optional<unsigned> b3;
  unsigned case_used = 0;  // 2 when b_2 <= 1 with 2-geodesic-transitivity, 3 for the b_3 route
  unsigned diameter = 0;
  bool geodesic_transitive = false;  // conclusion checked on the instance
  TransitivityReport check;
};

/// Checks the hypothesis ((G,2)-geodesic-transitive with b_2 <= 1, or
/// (G,3)-geodesic-transitive with b_3 <= 1) and then verifies the conclusion,
/// geodesic-transitivity, directly. Throws HypothesisNotMet.
inline ForcingReport remark_23_forcing(const Graph& g, const PermGroup& group, std::size_t budget = kDefaultTupleBudget) {
  ForcingReport rep;
  rep.diameter = diameter(g);
  if (rep.diameter < 2) throw Error(Errc::HypothesisNotMet, "diameter below 2: b_2 is undefined");
  if (auto x = intersection_numbers(g, 2)) rep.b2 = x->b;
  if (rep.diameter >= 3)
    if (auto x = intersection_numbers(g, 3)) rep.b3 = x->b;
  const auto gt = transitivity(g, group, TransitivityMode::Geodesic, std::min(rep.diameter, 3U), budget);
  if (gt.max_s >= 2 && rep.b2 && *rep.b2 <= 1) rep.case_used = 2;
  else if (gt.max_s >= 3 && rep.b3 && *rep.b3 <= 1) rep.case_used = 3;
  if (!rep.case_used)
    throw Error(Errc::HypothesisNotMet, "needs (G,2)-geodesic-transitivity with b_2 <= 1 or (G,3) with b_3 <= 1");
  rep.check = transitivity(g, group, TransitivityMode::Geodesic, rep.diameter, budget);
  rep.geodesic_transitive = rep.check.max_s == rep.diameter;
  return rep;
}

}  // namespace geodex
