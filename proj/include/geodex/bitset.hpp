#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace geodex {

/// Fixed-width bitset sized at construction. Used for adjacency rows and
/// vertex sets, where intersections dominate the cost.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const word_type* data() const noexcept { return words_.data(); }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  /// Calls f(i) for each set bit, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      word_type w = words_[wi];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(wi * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  bool operator==(const Bitset&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// |a ∩ b| without materializing the intersection.
inline std::size_t intersection_count(const Bitset& a, const Bitset& b) noexcept {
  std::size_t total = 0;
  const auto* x = a.data();
  const auto* y = b.data();
  for (std::size_t i = 0; i < a.word_count(); ++i) total += static_cast<std::size_t>(std::popcount(x[i] & y[i]));
  return total;
}

}  // namespace geodex
