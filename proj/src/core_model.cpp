#include "ctri/core_model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ctri {

Row::Row(int palette, int level, std::vector<Color> entries)
    : palette_(palette), level_(level), entries_(std::move(entries)) {
  if (palette < 1) throw std::invalid_argument("palette size must be at least 1");
  if (level < 1) throw std::invalid_argument("row level must be at least 1");
  if (entries_.size() != static_cast<std::size_t>(palette) * static_cast<std::size_t>(level)) {
    std::ostringstream os;
    os << "level-" << level << " row over " << palette << " colors needs " << palette * level
       << " entries, got " << entries_.size();
    throw std::invalid_argument(os.str());
  }
  for (Color c : entries_) {
    if (c < 1 || c > palette) {
      throw std::invalid_argument("color " + std::to_string(c) + " outside palette 1.." +
                                  std::to_string(palette));
    }
  }
}

Color Row::at(int triangle, int position) const {
  if (triangle < 1 || triangle > palette_ || position < 1 || position > level_) {
    throw std::out_of_range("triangle/position index out of range");
  }
  return entries_[static_cast<std::size_t>((triangle - 1) * level_ + position - 1)];
}

bool Row::has_valid_multiplicities() const {
  std::vector<int> counts(static_cast<std::size_t>(palette_) + 1, 0);
  for (Color c : entries_) ++counts[c];
  return std::all_of(counts.begin() + 1, counts.end(), [&](int x) { return x == level_; });
}

Row Row::staircase(int palette, int level) {
  std::vector<Color> e;
  e.reserve(static_cast<std::size_t>(palette * level));
  for (int c = 1; c <= palette; ++c) e.insert(e.end(), static_cast<std::size_t>(level), static_cast<Color>(c));
  return Row(palette, level, std::move(e));
}

std::string MergedRow::to_string() const {
  std::string out = "(";
  for (const auto& s : slots) {
    if (s.origin == SlotOrigin::Bottom) {
      out += '|';
      out += std::to_string(s.color);
      out += '|';
    } else {
      out += std::to_string(s.color);
    }
  }
  return out + ")";
}

namespace {

void check_pair(const Row& bottom, const Row& top) {
  if (bottom.palette() != top.palette()) throw std::invalid_argument("palette mismatch between rows");
  if (bottom.level() + 1 != top.level()) {
    throw std::invalid_argument("level mismatch: top row must sit exactly one level above bottom");
  }
}

}  // namespace

MergedRow merge_rows(const Row& bottom, const Row& top) {
  check_pair(bottom, top);
  const int n = bottom.palette();
  const int k = bottom.level();
  MergedRow m;
  m.palette = n;
  m.bottom_level = k;
  m.slots.reserve(static_cast<std::size_t>(n * (2 * k + 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= k; ++j) {
      m.slots.push_back({SlotOrigin::Top, top[static_cast<std::size_t>(i * (k + 1) + j)]});
      if (j < k) m.slots.push_back({SlotOrigin::Bottom, bottom[static_cast<std::size_t>(i * k + j)]});
    }
  }
  return m;
}

bool is_interlacing(int palette, int bottom_level, std::span<const Color> bottom,
                    std::span<const Color> top) {
  const int n = palette;
  const int k = bottom_level;
  // open[c]: color c has placed its top entry in the current gap between its
  // bottom entries. A top entry needs the gap still empty; a bottom entry needs it filled.
  std::vector<std::uint8_t> filled(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> tops(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= k; ++j) {
      Color t = top[static_cast<std::size_t>(i * (k + 1) + j)];
      if (filled[t]) return false;
      filled[t] = 1;
      ++tops[t];
      if (j < k) {
        Color b = bottom[static_cast<std::size_t>(i * k + j)];
        if (!filled[b]) return false;
        filled[b] = 0;
      }
    }
  }
  for (int c = 1; c <= n; ++c) {
    if (!filled[static_cast<std::size_t>(c)] || tops[static_cast<std::size_t>(c)] != k + 1) return false;
  }
  return true;
}

bool is_interlacing(const Row& bottom, const Row& top) {
  check_pair(bottom, top);
  return is_interlacing(bottom.palette(), bottom.level(), bottom.entries(), top.entries());
}

Triangle::Triangle(std::vector<Row> rows) : palette_(0), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("triangle needs at least one level");
  palette_ = rows_.front().palette();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].palette() != palette_) throw std::invalid_argument("rows disagree on palette size");
    if (rows_[k].level() != static_cast<int>(k) + 1) {
      throw std::invalid_argument("row " + std::to_string(k + 1) + " has level " +
                                  std::to_string(rows_[k].level()));
    }
  }
}

Triangle Triangle::staircase(int palette, int depth) {
  std::vector<Row> rows;
  for (int k = 1; k <= depth; ++k) rows.push_back(Row::staircase(palette, k));
  return Triangle(std::move(rows));
}

std::optional<ValidationIssue> diagnose_triangle(const Triangle& t) {
  const int n = t.palette();
  for (const Row& r : t.rows()) {
    std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
    for (Color c : r.entries()) ++counts[c];
    for (int c = 1; c <= n; ++c) {
      if (counts[static_cast<std::size_t>(c)] != r.level()) {
        std::ostringstream os;
        os << "level " << r.level() << ": color " << c << " appears "
           << counts[static_cast<std::size_t>(c)] << " times, expected " << r.level();
        return ValidationIssue{ValidationIssue::Kind::Multiplicity, r.level(), static_cast<Color>(c), -1,
                               os.str()};
      }
    }
  }
  for (int k = 1; k < t.depth(); ++k) {
    const MergedRow m = merge_rows(t.level(k), t.level(k + 1));
    std::vector<std::uint8_t> filled(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t s = 0; s < m.slots.size(); ++s) {
      const auto& slot = m.slots[s];
      const bool is_top = slot.origin == SlotOrigin::Top;
      if (is_top == static_cast<bool>(filled[slot.color])) {
        std::ostringstream os;
        os << "levels " << k << "/" << k + 1 << ": color " << slot.color << " at merged slot " << s + 1
           << (is_top ? " has two top entries without a bottom entry between them"
                      : " has two bottom entries without a top entry between them");
        return ValidationIssue{ValidationIssue::Kind::Interlacing, k, slot.color, static_cast<int>(s) + 1,
                               os.str()};
      }
      filled[slot.color] = is_top ? 1 : 0;
    }
    // Multiplicities already hold, so each color ends with its gap filled.
  }
  return std::nullopt;
}

void require_color_permutation(std::span<const Color> perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) + 1, 0);
  for (Color c : perm) {
    if (c < 1 || c > n || seen[c]) throw std::invalid_argument("not a bijection of {1..n}");
    seen[c] = 1;
  }
}

ColorPermutation identity_permutation(int n) {
  ColorPermutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<Color>(i + 1);
  return p;
}

ColorPermutation inverse_permutation(std::span<const Color> perm) {
  ColorPermutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = static_cast<Color>(i + 1);
  return inv;
}

ColorPermutation compose(std::span<const Color> a, std::span<const Color> b) {
  ColorPermutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

Row apply_color_permutation(const Row& row, std::span<const Color> perm) {
  require_color_permutation(perm, row.palette());
  std::vector<Color> e(row.entries().begin(), row.entries().end());
  for (Color& c : e) c = perm[c - 1];
  return Row(row.palette(), row.level(), std::move(e));
}

Triangle apply_color_permutation(const Triangle& t, std::span<const Color> perm) {
  require_color_permutation(perm, t.palette());
  std::vector<Row> rows;
  rows.reserve(t.rows().size());
  for (const Row& r : t.rows()) rows.push_back(apply_color_permutation(r, perm));
  return Triangle(std::move(rows));
}

Triangle color_complement(const Triangle& t) {
  const int n = t.palette();
  ColorPermutation rev(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c) rev[static_cast<std::size_t>(c - 1)] = static_cast<Color>(n + 1 - c);
  return apply_color_permutation(t, rev);
}

Triangle boundary_involution(const Triangle& t, int i) {
  const int n = t.palette();
  const int N = t.depth();
  if (N < 2) throw std::invalid_argument("boundary involution needs depth at least 2");
  if (i < 1 || i > n - 1) throw std::out_of_range("boundary index must lie in 1..n-1");
  std::vector<Row> rows = t.rows();
  const Row& top = rows.back();
  std::vector<Color> e(top.entries().begin(), top.entries().end());
  // Last entry of triangle i and first entry of triangle i+1 (0-based flat slots).
  std::swap(e[static_cast<std::size_t>(i * N - 1)], e[static_cast<std::size_t>(i * N)]);
  rows.back() = Row(n, N, std::move(e));
  return Triangle(std::move(rows));
}

CanonicalForm canonicalize_bottom(const Triangle& t) {
  const Row& bottom = t.level(1);
  // pi sends the color at position j to j.
  ColorPermutation pi(static_cast<std::size_t>(t.palette()));
  for (std::size_t j = 0; j < bottom.size(); ++j) pi[bottom[j] - 1] = static_cast<Color>(j + 1);
  require_color_permutation(pi, t.palette());
  return CanonicalForm{apply_color_permutation(t, pi), pi};
}

}  // namespace ctri
