#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ctri {

/// Colors are 1-based: a palette of size n uses the values 1..n.
using Color = std::uint16_t;

/// A color permutation pi stored as images: perm[c - 1] = pi(c).
using ColorPermutation = std::vector<Color>;

/// One level of a triangle, flattened in linear-order reading: the entries of
/// triangle 1 at this level, then those of triangle 2, and so on. A level-k row
/// over a palette of size n has n*k entries.
class Row {
 public:
  Row(int palette, int level, std::vector<Color> entries);

  int palette() const { return palette_; }
  int level() const { return level_; }
  std::span<const Color> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Color operator[](std::size_t i) const { return entries_[i]; }

  /// Triangle-wise view: entry j (1-based) of triangle i (1-based) at this level.
  Color at(int triangle, int position) const;

  /// True iff each color occurs exactly level() times.
  bool has_valid_multiplicities() const;

  /// Row (1^k, 2^k, ..., n^k), i.e. triangle i filled with color i.
  static Row staircase(int palette, int level);

  friend bool operator==(const Row&, const Row&) = default;

 private:
  int palette_;
  int level_;
  std::vector<Color> entries_;
};

enum class SlotOrigin : std::uint8_t { Top, Bottom };

struct MergedSlot {
  SlotOrigin origin;
  Color color;
  friend bool operator==(const MergedSlot&, const MergedSlot&) = default;
};

/// Two consecutive levels merged into the single linear order used for
/// interlacing and for the psi statistic.
struct MergedRow {
  int palette = 0;
  int bottom_level = 0;
  std::vector<MergedSlot> slots;

  /// Compact rendering like "(2|2|13|3|32|1|1)": bottom entries are framed by bars.
  std::string to_string() const;
};

/// Interleaves a level-k row with a level-(k+1) row. For each triangle i the
/// slots read top_1, bottom_1, top_2, ..., bottom_k, top_{k+1}.
/// Throws std::invalid_argument on palette or level mismatch.
MergedRow merge_rows(const Row& bottom, const Row& top);

/// For every color, its slots in merged order alternate Top, Bottom, ..., Top.
bool is_interlacing(const Row& bottom, const Row& top);

/// Flat-buffer variant used by hot loops: bottom has n*k entries, top n*(k+1).
bool is_interlacing(int palette, int bottom_level, std::span<const Color> bottom,
                    std::span<const Color> top);

class Triangle {
 public:
  /// Checks shape only (levels 1..N, common palette); colors may still violate
  /// the multiplicity or interlacing invariants, see validate_triangle.
  explicit Triangle(std::vector<Row> rows);

  int palette() const { return palette_; }
  int depth() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  /// Level k, 1-based.
  const Row& level(int k) const { return rows_.at(static_cast<std::size_t>(k - 1)); }

  static Triangle staircase(int palette, int depth);

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  int palette_;
  std::vector<Row> rows_;
};

struct ValidationIssue {
  enum class Kind { Multiplicity, Interlacing };
  Kind kind;
  int level;          // offending level (for Interlacing: the lower of the pair)
  Color color;        // offending color
  int slot;           // 1-based row index (Multiplicity: -1) or merged slot index
  std::string message;
};

/// std::nullopt when the triangle satisfies every invariant; otherwise the
/// first violated constraint scanning levels bottom-up.
std::optional<ValidationIssue> diagnose_triangle(const Triangle& t);

inline bool validate_triangle(const Triangle& t) { return !diagnose_triangle(t).has_value(); }

/// Throws std::invalid_argument unless perm is a bijection of {1..n}.
void require_color_permutation(std::span<const Color> perm, int n);

ColorPermutation identity_permutation(int n);
ColorPermutation inverse_permutation(std::span<const Color> perm);
/// (a o b)(c) = a(b(c)).
ColorPermutation compose(std::span<const Color> a, std::span<const Color> b);

Row apply_color_permutation(const Row& row, std::span<const Color> perm);
Triangle apply_color_permutation(const Triangle& t, std::span<const Color> perm);

/// Relabels every color c as n + 1 - c.
Triangle color_complement(const Triangle& t);

/// Swaps the last top-level entry of triangle i with the first top-level entry
/// of triangle i+1 (1 <= i <= n-1). Requires depth >= 2.
Triangle boundary_involution(const Triangle& t, int i);

struct CanonicalForm {
  Triangle triangle;
  ColorPermutation permutation;  // triangle == apply_color_permutation(original, permutation)
};

/// Relabels colors so that the bottom row reads (1, 2, ..., n).
CanonicalForm canonicalize_bottom(const Triangle& t);

}  // namespace ctri
