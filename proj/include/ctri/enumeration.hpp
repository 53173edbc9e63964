#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctri/bigint.hpp"
#include "ctri/core_model.hpp"

namespace ctri {

class ResourceLimitExceeded : public std::runtime_error {
 public:
  ResourceLimitExceeded(const std::string& what, int level, std::size_t frontier_size)
      : std::runtime_error(what), level_(level), frontier_size_(frontier_size) {}
  int level() const { return level_; }
  std::size_t frontier_size() const { return frontier_size_; }

 private:
  int level_;
  std::size_t frontier_size_;
};

/// Precomputed merged-order layout for extending one fixed level-k row to level
/// k+1. Tracks, per color, whether the current gap between its bottom entries
/// already holds a top entry; a backward reachability table over these masks
/// keeps generation free of dead ends.
class ExtensionPlan {
 public:
  static constexpr int kMaxPalette = 20;

  /// canonical: only tops whose last entry of triangle i is smaller than the
  /// first entry of triangle i+1 (one representative per boundary-involution orbit).
  ExtensionPlan(int palette, int bottom_level, std::span<const Color> bottom, bool canonical);

  /// Calls visit(top) for each top row of level k+1 interlacing with the bottom row.
  void for_each(const std::function<void(std::span<const Color>)>& visit) const;

  /// Number of such top rows, by transfer-matrix counting over gap masks.
  std::uint64_t count() const;

  int palette() const { return n_; }
  int bottom_level() const { return k_; }

 private:
  struct Slot {
    bool top;
    Color color;            // bottom slots: the fixed color
    std::int32_t top_index; // top slots: index into the new row
    bool pair_second;       // first top slot of triangle i+1, right after the last of triangle i
  };

  std::vector<std::uint8_t> reachability() const;

  int n_;
  int k_;
  bool canonical_;
  std::size_t mask_count_;
  std::vector<Slot> slots_;
};

/// All level-(k+1) rows interlacing with row, in lexicographic order of generation.
std::vector<Row> extensions(const Row& row, bool canonical = false);

struct CountOptions {
  bool use_top_symmetry = true;
  std::size_t batch_size = 10'000'000;  // source rows per batch
  int threads = 1;
  std::size_t max_frontier = 200'000'000;  // distinct rows kept at any level
  /// Progress callback (level, frontier size); best effort.
  std::function<void(int, std::size_t)> on_level;
};

struct CountReport {
  int depth = 0;
  int palette = 0;
  BigInt total;
  BigInt normalized;  // total / n!
  int two_adic = 0;   // 2-adic valuation of normalized
  double elapsed_seconds = 0.0;
  std::uint64_t states_checked = 0;
  std::vector<std::size_t> frontier_sizes;  // distinct rows per level
};

/// T_N(n) by level-by-level dynamic programming over rows with the identity
/// bottom row; the final level is counted without being materialized.
CountReport count_triangles(int depth, int palette, const CountOptions& options = {});

/// Largest e with 2^e | x. Throws std::domain_error for x <= 0.
int two_adic_valuation(const BigInt& x);

bool divisor_check(const BigInt& x, const BigInt& d);

/// Row serialization used as frontier key: colors packed into fixed-width bit fields.
std::string pack_row(std::span<const Color> entries, int palette);
std::vector<Color> unpack_row(const std::string& key, int palette, std::size_t length);

}  // namespace ctri
