#pragma once

#include <nlohmann/json.hpp>

#include "geodex/graph.hpp"
#include "geodex/regularity.hpp"
#include "geodex/symmetry.hpp"

namespace geodex {

using json = nlohmann::json;

inline json to_json(const IntersectionArray& a) { return a.flat(); }

inline json to_json(const SrgParams& p) { return json::array({p.n, p.k, p.a, p.c}); }

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? to_json(*x) : json(nullptr);
}

inline json tuple_json(std::span<const Vertex> t) { return std::vector<Vertex>(t.begin(), t.end()); }

inline json to_json(const TransitivityReport& r) {
  json levels = json::array();
  for (const auto& lv : r.per_s) {
    json j{{"s", lv.s}, {"tuple_count", lv.tuple_count}, {"orbit_size", lv.orbit_size}, {"covers", lv.covers}};
    j["seed"] = lv.seed.empty() ? json(nullptr) : tuple_json(lv.seed);
    j["witness"] = lv.witness ? tuple_json(*lv.witness) : json(nullptr);
    levels.push_back(std::move(j));
  }
  return {{"mode", to_string(r.mode)},
          {"requested_s", r.requested},
          {"max_s", r.max_s},
          {"transitive", r.max_s == r.requested},
          {"per_s", levels}};
}

inline json to_json(const LocalAction& la) {
  return {{"vertex", la.u},
          {"degree", la.degree},
          {"image_order", la.image_order},
          {"kernel_order", la.action.kernel_order},
          {"faithful", la.action.faithful},
          {"transitive", la.transitive},
          {"two_transitive", la.two_transitive},
          {"primitive", la.primitive},
          {"two_primitive", la.two_primitive},
          {"transitivity_degree", la.transitivity_degree}};
}

/// Basic invariants of a graph, as reported by `analyze`.
inline json analyze_graph(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  std::size_t dmin = g.order() ? g.degree(0) : 0, dmax = dmin;
  for (Vertex v = 0; v < g.order(); ++v) {
    dmin = std::min(dmin, g.degree(v));
    dmax = std::max(dmax, g.degree(v));
  }
  j["degrees"] = {{"min", dmin}, {"max", dmax}};
  j["valency"] = g.valency() ? json(*g.valency()) : json(nullptr);
  const unsigned gi = girth(g);
  j["girth"] = gi == kInfinite ? json(nullptr) : json(gi);
  const bool connected = g.order() > 0 && is_connected(g);
  j["connected"] = connected;
  j["bipartite"] = bipartition(g).has_value();
  j["diameter"] = connected ? json(diameter(g)) : json(nullptr);
  j["srg"] = connected ? optional_json(srg_params(g)) : json(nullptr);
  const auto arr = connected ? intersection_array(g) : std::nullopt;
  j["intersection_array"] = optional_json(arr);
  j["intersection_array_text"] = arr ? json(arr->to_string()) : json(nullptr);
  return j;
}

}  // namespace geodex
