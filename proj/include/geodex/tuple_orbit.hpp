#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "geodex/permgroup.hpp"
#include "geodex/walks.hpp"

namespace geodex {

inline constexpr std::size_t kDefaultTupleBudget = std::size_t{1} << 27;

struct TupleOrbitResult {
  bool covers = false;
  std::size_t orbit_size = 0;
  std::size_t universe_size = 0;
  /// First universe tuple (stream order) outside the seed's orbit.
  std::optional<std::vector<Vertex>> witness;
};

namespace detail {

/// Packs tuples into a single 64-bit key when they fit, else into a byte string.
class TupleCodec {
 public:
  TupleCodec(std::size_t degree, std::size_t length) : length_(length) {
    while ((std::size_t{1} << bits_) < std::max<std::size_t>(degree, 2)) ++bits_;
    packed_ = bits_ * length <= 64;
  }

  bool packed() const noexcept { return packed_; }

  std::uint64_t pack(std::span<const Vertex> t) const noexcept {
    std::uint64_t key = 0;
    for (Vertex x : t) key = (key << bits_) | x;
    return key;
  }

  void unpack(std::uint64_t key, std::vector<Vertex>& out) const {
    out.resize(length_);
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (std::size_t i = length_; i-- > 0;) {
      out[i] = static_cast<Vertex>(key & mask);
      key >>= bits_;
    }
  }

  std::string bytes(std::span<const Vertex> t) const {
    return {reinterpret_cast<const char*>(t.data()), t.size() * sizeof(Vertex)};
  }

  void unbytes(const std::string& key, std::vector<Vertex>& out) const {
    out.resize(length_);
    std::memcpy(out.data(), key.data(), length_ * sizeof(Vertex));
  }

 private:
  std::size_t length_;
  unsigned bits_ = 1;
  bool packed_ = true;
};

template <class Key, class Encode, class Decode>
std::unordered_set<Key> tuple_closure(const PermGroup& group, std::span<const Vertex> seed, std::size_t budget,
                                      Encode encode, Decode decode) {
  std::unordered_set<Key> seen;
  std::vector<Key> queue;
  seen.insert(encode(seed));
  queue.push_back(encode(seed));
  std::vector<Vertex> cur, img(seed.size());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    decode(queue[head], cur);
    for (const auto& g : group.generators()) {
      for (std::size_t i = 0; i < cur.size(); ++i) img[i] = g(cur[i]);
      auto key = encode(img);
      if (seen.insert(key).second) {
        if (seen.size() > budget)
          throw Error(Errc::TupleBudgetExceeded, "tuple orbit exceeds " + std::to_string(budget) + " tuples");
        queue.push_back(std::move(key));
      }
    }
  }
  return seen;
}

template <class Key, TupleStream S, class Encode>
TupleOrbitResult compare_with_universe(const std::unordered_set<Key>& orbit_set, std::span<const Vertex> seed,
                                       S universe, Encode encode) {
  TupleOrbitResult r;
  r.orbit_size = orbit_set.size();
  bool seed_found = false;
  std::size_t hits = 0;
  while (universe.next()) {
    const auto t = universe.current();
    ++r.universe_size;
    if (!seed_found && std::equal(t.begin(), t.end(), seed.begin(), seed.end())) seed_found = true;
    if (orbit_set.count(encode(t))) ++hits;
    else if (!r.witness) r.witness.emplace(t.begin(), t.end());
  }
  if (!seed_found) throw Error(Errc::SeedNotInUniverse, "seed tuple is not in the universe");
  r.covers = hits == r.universe_size && hits == r.orbit_size;
  return r;
}

}  // namespace detail

/// Orbit of `seed` under the coordinatewise action, compared against the
/// universe by counting. The universe stream is consumed once.
/// Throws SeedNotInUniverse, TupleBudgetExceeded.
template <TupleStream S>
TupleOrbitResult tuple_orbit(const PermGroup& group, std::span<const Vertex> seed, S universe,
                             std::size_t budget = kDefaultTupleBudget) {
  for (Vertex x : seed)
    if (x >= group.degree()) throw Error(Errc::SeedNotInUniverse, "seed tuple leaves the point set");
  const detail::TupleCodec codec(group.degree(), seed.size());
  if (codec.packed()) {
    auto enc = [&](std::span<const Vertex> t) { return codec.pack(t); };
    auto dec = [&](std::uint64_t k, std::vector<Vertex>& out) { codec.unpack(k, out); };
    const auto orbit_set = detail::tuple_closure<std::uint64_t>(group, seed, budget, enc, dec);
    return detail::compare_with_universe(orbit_set, seed, std::move(universe), enc);
  }
  auto enc = [&](std::span<const Vertex> t) { return codec.bytes(t); };
  auto dec = [&](const std::string& k, std::vector<Vertex>& out) { codec.unbytes(k, out); };
  const auto orbit_set = detail::tuple_closure<std::string>(group, seed, budget, enc, dec);
  return detail::compare_with_universe(orbit_set, seed, std::move(universe), enc);
}

template <TupleStream S>
bool tuple_orbit_covers(const PermGroup& group, std::span<const Vertex> seed, S universe,
                        std::size_t budget = kDefaultTupleBudget) {
  return tuple_orbit(group, seed, std::move(universe), budget).covers;
}

}  // namespace geodex
