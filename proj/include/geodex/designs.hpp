#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "geodex/error.hpp"
#include "geodex/graph.hpp"

namespace geodex {

// ---------------------------------------------------------------------------
// Binary Golay code and S(3,6,22)

/// The extended binary Golay code [24,12,8]: the cyclic quadratic-residue code
/// of length 23 with generator 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11,
/// extended by an overall parity bit (coordinate 23). Bit i of a word is coordinate i.
class GolayCode {
 public:
  static constexpr std::uint32_t kGenerator = 0b110001110101;  // bits 0,2,4,5,6,10,11

  GolayCode() {
    std::array<std::uint32_t, 12> rows{};
    for (unsigned s = 0; s < 12; ++s) rows[s] = extend(kGenerator << s);
    words_.resize(4096);
    for (std::uint32_t m = 0; m < 4096; ++m) {
      std::uint32_t w = 0;
      for (unsigned s = 0; s < 12; ++s)
        if (m >> s & 1U) w ^= rows[s];
      words_[m] = w;
    }
    std::sort(words_.begin(), words_.end());
  }

  const std::vector<std::uint32_t>& codewords() const noexcept { return words_; }

  /// Number of codewords of each weight 0..24.
  std::array<std::size_t, 25> weight_distribution() const {
    std::array<std::size_t, 25> d{};
    for (auto w : words_) ++d[static_cast<std::size_t>(std::popcount(w))];
    return d;
  }

  std::vector<std::uint32_t> octads() const {
    std::vector<std::uint32_t> out;
    for (auto w : words_)
      if (std::popcount(w) == 8) out.push_back(w);
    return out;
  }

 private:
  static std::uint32_t extend(std::uint32_t w23) {
    const auto parity = static_cast<std::uint32_t>(std::popcount(w23) & 1);
    return w23 | (parity << 23);
  }

  std::vector<std::uint32_t> words_;
};

struct SteinerSystem {
  std::size_t points = 0;
  std::size_t t = 0;
  std::vector<std::vector<Vertex>> blocks;  // each ascending
};

/// Every t-subset of points lies in exactly one block.
inline bool is_steiner_system(const SteinerSystem& s) {
  if (s.t != 3) throw Error(Errc::ParameterOutOfRange, "only t = 3 is checked");
  const auto n = s.points;
  std::vector<unsigned> hit(n * n * n, 0);
  for (const auto& b : s.blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        for (std::size_t k = j + 1; k < b.size(); ++k) ++hit[(b[i] * n + b[j]) * n + b[k]];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (hit[(a * n + b) * n + c] != 1) return false;
  return true;
}

/// S(3,6,22): octads through coordinates 22 and 23, with those two deleted.
/// Throws InternalVerificationFailed.
inline SteinerSystem witt_22() {
  const GolayCode code;
  const auto dist = code.weight_distribution();
  if (dist[0] != 1 || dist[8] != 759 || dist[12] != 2576 || dist[16] != 759 || dist[24] != 1)
    throw Error(Errc::InternalVerificationFailed, "Golay weight enumerator mismatch");
  SteinerSystem s;
  s.points = 22;
  s.t = 3;
  const std::uint32_t pair = (1U << 22) | (1U << 23);
  for (auto w : code.octads()) {
    if ((w & pair) != pair) continue;
    std::vector<Vertex> block;
    for (Vertex i = 0; i < 22; ++i)
      if (w >> i & 1U) block.push_back(i);
    s.blocks.push_back(std::move(block));
  }
  std::sort(s.blocks.begin(), s.blocks.end());
  if (s.blocks.size() != 77 || !is_steiner_system(s))
    throw Error(Errc::InternalVerificationFailed, "derived system is not S(3,6,22)");
  return s;
}

// ---------------------------------------------------------------------------
// Hadamard matrices

enum class HadamardMethod { Sylvester, Paley };

struct HadamardMatrix {
  std::size_t order = 0;
  std::vector<std::vector<int>> entries;

  int operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }

  /// H H^T = n I.
  bool valid() const {
    if (entries.size() != order) return false;
    for (const auto& row : entries) {
      if (row.size() != order) return false;
      for (int x : row)
        if (x != 1 && x != -1) return false;
    }
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) {
        long long dot = 0;
        for (std::size_t k = 0; k < order; ++k) dot += entries[i][k] * entries[j][k];
        if (dot != (i == j ? static_cast<long long>(order) : 0)) return false;
      }
    return true;
  }
};

namespace detail {

inline bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace detail

/// Sylvester (order a power of 2) or Paley I (order q + 1, q a prime with
/// q = 3 mod 4). Throws InvalidOrder.
inline HadamardMatrix hadamard_matrix(std::size_t order, HadamardMethod method) {
  HadamardMatrix h;
  h.order = order;
  if (method == HadamardMethod::Sylvester) {
    if (order == 0 || (order & (order - 1)) != 0)
      throw Error(Errc::InvalidOrder, "Sylvester order must be a power of 2, got " + std::to_string(order));
    h.entries.assign(order, std::vector<int>(order));
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) h.entries[i][j] = std::popcount(i & j) % 2 ? -1 : 1;
  } else {
    const std::size_t q = order - 1;
    if (order < 4 || !detail::is_prime(q) || q % 4 != 3)
      throw Error(Errc::InvalidOrder, "Paley order must be q+1 with q prime, q = 3 mod 4; got " + std::to_string(order));
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (std::size_t x = 1; x < q; ++x) chi[x * x % q] = 1;
    // H = I + S with S = [[0, 1^T], [-1, Q]], Q_ab = chi(b - a)
    h.entries.assign(order, std::vector<int>(order, 0));
    for (std::size_t j = 1; j < order; ++j) {
      h.entries[0][j] = 1;
      h.entries[j][0] = -1;
    }
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) h.entries[a + 1][b + 1] = chi[(b + q - a) % q];
    for (std::size_t i = 0; i < order; ++i) h.entries[i][i] += 1;
  }
  if (!h.valid()) throw Error(Errc::InternalVerificationFailed, "constructed matrix is not Hadamard");
  return h;
}

// ---------------------------------------------------------------------------
// Resolvable divisible designs RGD(r, lambda, m): r classes of size m,
// blocks of size r meeting each class once, cross-class pairs in lambda
// blocks, blocks split into parallel classes.

struct RgdDesign {
  std::size_t points = 0;
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::vector<std::size_t>> parallel_classes;
};

struct RgdParameters {
  std::size_t r = 0;       // number of point classes = block size
  std::size_t lambda = 0;  // blocks through a cross-class pair
  std::size_t m = 0;       // class size
};

/// Checks the design axioms and returns (r, lambda, m).
/// Throws DesignInvariantViolated with the first offending object.
inline RgdParameters validate_rgd(const RgdDesign& d) {
  auto fail = [](const std::string& why) { throw Error(Errc::DesignInvariantViolated, why); };
  const auto n = d.points;
  if (d.classes.empty()) fail("no point classes");
  std::vector<std::size_t> class_of(n, SIZE_MAX);
  const std::size_t m = d.classes.front().size();
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    if (d.classes[c].size() != m) fail("class " + std::to_string(c) + " has size " + std::to_string(d.classes[c].size()));
    for (Vertex x : d.classes[c]) {
      if (x >= n || class_of[x] != SIZE_MAX) fail("point " + std::to_string(x) + " repeated or out of range in classes");
      class_of[x] = c;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (class_of[x] == SIZE_MAX) fail("point " + std::to_string(x) + " in no class");
  const std::size_t r = d.classes.size();
  std::vector<std::vector<char>> incidence(d.blocks.size(), std::vector<char>(n, 0));
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    std::vector<char> seen(r, 0);
    if (d.blocks[b].size() != r) fail("block " + std::to_string(b) + " does not meet every class once");
    for (Vertex x : d.blocks[b]) {
      if (x >= n) fail("block " + std::to_string(b) + " has point out of range");
      if (seen[class_of[x]]++) fail("block " + std::to_string(b) + " meets class " + std::to_string(class_of[x]) + " twice");
      incidence[b][x] = 1;
    }
  }
  std::optional<std::size_t> lambda;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (class_of[x] == class_of[y]) continue;
      std::size_t cnt = 0;
      for (const auto& row : incidence) cnt += row[x] && row[y];
      if (!lambda) lambda = cnt;
      else if (*lambda != cnt)
        fail("points " + std::to_string(x) + "," + std::to_string(y) + " lie in " + std::to_string(cnt) + " blocks, expected " +
             std::to_string(*lambda));
    }
  std::vector<char> used(d.blocks.size(), 0);
  for (std::size_t p = 0; p < d.parallel_classes.size(); ++p) {
    std::vector<char> covered(n, 0);
    for (auto b : d.parallel_classes[p]) {
      if (b >= d.blocks.size() || used[b]++) fail("block index " + std::to_string(b) + " repeated or out of range in parallel classes");
      for (Vertex x : d.blocks[b])
        if (covered[x]++) fail("parallel class " + std::to_string(p) + " covers point " + std::to_string(x) + " twice");
    }
    if (std::count(covered.begin(), covered.end(), 1) != static_cast<long>(n))
      fail("parallel class " + std::to_string(p) + " does not cover every point");
  }
  for (std::size_t b = 0; b < used.size(); ++b)
    if (!used[b]) fail("block " + std::to_string(b) + " in no parallel class");
  return {r, lambda.value_or(0), m};
}

/// Design from a generalized Hadamard matrix GH(n, Z_q): points (i, a) with
/// class i; block (j, b) = {(i, b - M[i][j])}; parallel class j = blocks (j, *).
inline RgdDesign rgd_from_generalized_hadamard(const std::vector<std::vector<unsigned>>& mat, unsigned q) {
  const auto n = mat.size();
  RgdDesign d;
  d.points = n * q;
  auto point = [&](std::size_t i, unsigned a) { return static_cast<Vertex>(i * q + a); };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> cls;
    for (unsigned a = 0; a < q; ++a) cls.push_back(point(i, a));
    d.classes.push_back(std::move(cls));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> par;
    for (unsigned b = 0; b < q; ++b) {
      std::vector<Vertex> block;
      for (std::size_t i = 0; i < n; ++i) block.push_back(point(i, (b + q - mat[i][j] % q) % q));
      par.push_back(d.blocks.size());
      d.blocks.push_back(std::move(block));
    }
    d.parallel_classes.push_back(std::move(par));
  }
  return d;
}

/// RGD(n, n/2, 2) from a Hadamard matrix, reading +1 as 0 and -1 as 1 in Z_2.
inline RgdDesign rgd_from_hadamard(const HadamardMatrix& h) {
  std::vector<std::vector<unsigned>> mat(h.order, std::vector<unsigned>(h.order));
  for (std::size_t i = 0; i < h.order; ++i)
    for (std::size_t j = 0; j < h.order; ++j) mat[i][j] = h(i, j) == 1 ? 0 : 1;
  return rgd_from_generalized_hadamard(mat, 2);
}

/// AG(2, q) with one parallel class of lines taken as the point classes:
/// RGD(q, 1, q). Uses the multiplication table of Z_q, q prime.
inline RgdDesign rgd_affine_plane(unsigned q) {
  if (!detail::is_prime(q)) throw Error(Errc::ParameterOutOfRange, "affine plane order must be prime");
  std::vector<std::vector<unsigned>> mat(q, std::vector<unsigned>(q));
  for (unsigned i = 0; i < q; ++i)
    for (unsigned j = 0; j < q; ++j) mat[i][j] = i * j % q;
  return rgd_from_generalized_hadamard(mat, q);
}

/// A GH(6, Z_3), giving an RGD(6, 2, 3).
inline std::vector<std::vector<unsigned>> generalized_hadamard_6_3() {
  return {{0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 2, 2}, {0, 1, 0, 2, 1, 2},
          {0, 1, 2, 0, 2, 1}, {0, 2, 1, 2, 0, 1}, {0, 2, 2, 1, 1, 0}};
}

inline nlohmann::json rgd_to_json(const RgdDesign& d) {
  return {{"points", d.points}, {"classes", d.classes}, {"blocks", d.blocks}, {"parallel_classes", d.parallel_classes}};
}

inline RgdDesign rgd_from_json(const nlohmann::json& j) {
  try {
    RgdDesign d;
    d.points = j.at("points").get<std::size_t>();
    d.classes = j.at("classes").get<std::vector<std::vector<Vertex>>>();
    d.blocks = j.at("blocks").get<std::vector<std::vector<Vertex>>>();
    d.parallel_classes = j.at("parallel_classes").get<std::vector<std::vector<std::size_t>>>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace geodex
