#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "geodex/error.hpp"
#include "geodex/graph.hpp"

namespace geodex {

/// A bijection of 0..n-1 stored as its image array: p(i) = img[i].
/// Products compose left to right: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : img_(degree) {
    for (std::size_t i = 0; i < degree; ++i) img_[i] = static_cast<Vertex>(i);
  }

  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images) : img_(std::move(images)) {
    std::vector<bool> hit(img_.size(), false);
    for (Vertex x : img_) {
      if (x >= img_.size() || hit[x]) throw Error(Errc::InvalidPermutation, "image array is not a bijection");
      hit[x] = true;
    }
  }

  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Vertex>>& cycles) {
    std::vector<Vertex> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Vertex>(i);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Vertex x = cyc[i];
        if (x >= degree || used[x]) throw Error(Errc::InvalidPermutation, "cycles overlap or leave the domain");
        used[x] = true;
        img[x] = cyc[(i + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(img));
  }

  std::size_t degree() const noexcept { return img_.size(); }
  Vertex operator()(Vertex x) const noexcept { return img_[x]; }
  std::span<const Vertex> images() const noexcept { return img_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  bool fixes(Vertex x) const noexcept { return img_[x] == x; }

  Permutation inverse() const {
    Permutation inv;
    inv.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv.img_[img_[i]] = static_cast<Vertex>(i);
    return inv;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw Error(Errc::DegreeMismatch, "product of permutations of different degree");
    Permutation r;
    r.img_.resize(p.img_.size());
    for (std::size_t i = 0; i < p.img_.size(); ++i) r.img_[i] = q.img_[p.img_[i]];
    return r;
  }

  std::vector<std::vector<Vertex>> cycles() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      std::vector<Vertex> cyc;
      for (auto x = static_cast<Vertex>(i); !seen[x]; x = img_[x]) {
        seen[x] = true;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::string to_string() const {
    const auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string s;
    for (const auto& c : cyc) {
      s += "(";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
      s += ")";
    }
    return s;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Vertex> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Vertex x : p.images()) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

/// True iff p maps edges to edges (and hence, being a bijection, non-edges to non-edges).
inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p(u), p(v))) return false;
  return true;
}

}  // namespace geodex
