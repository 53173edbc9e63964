#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ctri/core_model.hpp"

namespace ctri {

/// Raised when a psi computation meets rows that do not interlace.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Subset of {1..n} stored as a fixed number of 64-bit words, supporting
/// "how many members exceed j" by masked popcount. Words = 1 covers n <= 64,
/// Words = 2 covers n <= 128.
template <std::size_t Words>
class WordActiveSet {
 public:
  static constexpr int kMaxColors = static_cast<int>(64 * Words);

  explicit WordActiveSet(int /*n*/ = 0) {}

  static WordActiveSet full(int n) {
    WordActiveSet s;
    for (int c = 1; c <= n; ++c) s.insert(static_cast<Color>(c));
    return s;
  }

  bool contains(Color c) const { return (words_[(c - 1) / 64] >> ((c - 1) % 64)) & 1U; }
  void insert(Color c) { words_[(c - 1) / 64] |= std::uint64_t{1} << ((c - 1) % 64); }
  void erase(Color c) { words_[(c - 1) / 64] &= ~(std::uint64_t{1} << ((c - 1) % 64)); }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }

  /// |{c in set : c > j}|
  int count_above(Color j) const {
    const std::size_t w = j / 64;  // bit index of color j+1 is j
    const unsigned b = j % 64;
    if (w >= Words) return 0;
    int total = std::popcount(words_[w] & (~std::uint64_t{0} << b));
    for (std::size_t i = w + 1; i < Words; ++i) total += std::popcount(words_[i]);
    return total;
  }

  std::uint64_t word(std::size_t i) const { return words_[i]; }

 private:
  std::array<std::uint64_t, Words> words_{};
};

/// Fallback for palettes wider than 128 colors.
class DynamicActiveSet {
 public:
  explicit DynamicActiveSet(int n) : words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  static DynamicActiveSet full(int n) {
    DynamicActiveSet s(n);
    for (int c = 1; c <= n; ++c) s.insert(static_cast<Color>(c));
    return s;
  }

  bool contains(Color c) const { return (words_[(c - 1) / 64] >> ((c - 1) % 64)) & 1U; }
  void insert(Color c) { words_[(c - 1) / 64] |= std::uint64_t{1} << ((c - 1) % 64); }
  void erase(Color c) { words_[(c - 1) / 64] &= ~(std::uint64_t{1} << ((c - 1) % 64)); }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }
  int count_above(Color j) const {
    const std::size_t w = j / 64;
    const unsigned b = j % 64;
    if (w >= words_.size()) return 0;
    int total = std::popcount(words_[w] & (~std::uint64_t{0} << b));
    for (std::size_t i = w + 1; i < words_.size(); ++i) total += std::popcount(words_[i]);
    return total;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Vertex-model scan over flat rows (bottom: n*k entries, top: n*(k+1)).
/// Walks the merged order right to left starting from the full active set: a top
/// entry of color j removes j, a bottom entry of color j first adds the number
/// of active colors above j and then re-inserts j.
/// Throws ContractViolation when an insertion/removal is impossible.
long long psi_scan(int palette, int bottom_level, std::span<const Color> bottom,
                   std::span<const Color> top);

/// psi(bottom, top) through the vertex-model scan (production path).
long long psi_vertex(const Row& bottom, const Row& top);

/// psi(bottom, top) through the double sum over bottom positions p and colors
/// c' > c(p) of (#top c' left of p) - (#bottom c' left of p). Reference oracle.
long long psi_formula(const Row& bottom, const Row& top);

/// Sum of psi over consecutive level pairs.
long long psi_total(const Triangle& t);

/// Upper bound k * C(n, 2) for a level-k transition.
inline long long psi_upper_bound(int n, int k) { return static_cast<long long>(k) * n * (n - 1) / 2; }

}  // namespace ctri
