#pragma once

#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "geodex/permgroup.hpp"

namespace geodex {

/// Generator files: {"degree": n, "generators": [...]} where each generator
/// is either an image array [p(0), ..., p(n-1)] or a list of cycles [[a, b, c], ...].
inline PermGroup group_from_json(const nlohmann::json& j) {
  try {
    const auto degree = j.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (const auto& item : j.at("generators")) {
      if (!item.is_array()) throw Error(Errc::ParseError, "generator must be an array");
      const bool cycles = !item.empty() && item.front().is_array();
      if (cycles || item.empty()) {
        gens.push_back(Permutation::from_cycles(degree, item.get<std::vector<std::vector<Vertex>>>()));
      } else {
        auto img = item.get<std::vector<Vertex>>();
        if (img.size() != degree) throw Error(Errc::DegreeMismatch, "image array length differs from degree");
        gens.emplace_back(std::move(img));
      }
    }
    return PermGroup(degree, std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline nlohmann::json group_to_json(const PermGroup& group) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : group.generators()) gens.push_back(std::vector<Vertex>(g.images().begin(), g.images().end()));
  return {{"degree", group.degree()}, {"generators", gens}};
}

inline PermGroup read_group(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return group_from_json(j);
}

inline void write_group(std::ostream& out, const PermGroup& group) { out << group_to_json(group).dump(2) << "\n"; }

inline nlohmann::json partition_to_json(const VertexPartition& p) { return p.cells; }

inline VertexPartition partition_from_json(const nlohmann::json& j) {
  try {
    VertexPartition p;
    p.cells = j.get<std::vector<std::vector<Vertex>>>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace geodex
