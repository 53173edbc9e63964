#include "ctri/psi.hpp"

#include <string>

namespace ctri {

namespace {

template <class Set>
long long scan_impl(int n, int k, std::span<const Color> bottom, std::span<const Color> top) {
  Set active = Set::full(n);
  long long acc = 0;
  auto remove = [&](Color c) {
    if (!active.contains(c)) {
      throw ContractViolation("psi: color " + std::to_string(c) +
                              " leaves the active set twice; rows do not interlace");
    }
    active.erase(c);
  };
  for (int i = n - 1; i >= 0; --i) {
    const std::size_t top_base = static_cast<std::size_t>(i) * static_cast<std::size_t>(k + 1);
    const std::size_t bot_base = static_cast<std::size_t>(i) * static_cast<std::size_t>(k);
    remove(top[top_base + static_cast<std::size_t>(k)]);
    for (int j = k - 1; j >= 0; --j) {
      const Color b = bottom[bot_base + static_cast<std::size_t>(j)];
      if (active.contains(b)) {
        throw ContractViolation("psi: color " + std::to_string(b) +
                                " enters from below while still active; rows do not interlace");
      }
      acc += active.count_above(b);
      active.insert(b);
      remove(top[top_base + static_cast<std::size_t>(j)]);
    }
  }
  if (!active.empty()) throw ContractViolation("psi: active set not empty after the scan");
  return acc;
}

void check_pair(const Row& bottom, const Row& top) {
  if (bottom.palette() != top.palette()) throw std::invalid_argument("palette mismatch between rows");
  if (bottom.level() + 1 != top.level()) throw std::invalid_argument("level mismatch between rows");
}

}  // namespace

long long psi_scan(int palette, int bottom_level, std::span<const Color> bottom,
                   std::span<const Color> top) {
  if (palette <= WordActiveSet<1>::kMaxColors) {
    return scan_impl<WordActiveSet<1>>(palette, bottom_level, bottom, top);
  }
  if (palette <= WordActiveSet<2>::kMaxColors) {
    return scan_impl<WordActiveSet<2>>(palette, bottom_level, bottom, top);
  }
  return scan_impl<DynamicActiveSet>(palette, bottom_level, bottom, top);
}

long long psi_vertex(const Row& bottom, const Row& top) {
  check_pair(bottom, top);
  return psi_scan(bottom.palette(), bottom.level(), bottom.entries(), top.entries());
}

long long psi_formula(const Row& bottom, const Row& top) {
  const MergedRow m = merge_rows(bottom, top);
  const int n = m.palette;
  std::vector<long long> tops_left(static_cast<std::size_t>(n) + 1, 0);
  std::vector<long long> bottoms_left(static_cast<std::size_t>(n) + 1, 0);
  long long acc = 0;
  for (const auto& slot : m.slots) {
    if (slot.origin == SlotOrigin::Bottom) {
      for (int c = slot.color + 1; c <= n; ++c) {
        const long long term = tops_left[static_cast<std::size_t>(c)] - bottoms_left[static_cast<std::size_t>(c)];
        if (term < 0 || term > 1) {
          throw ContractViolation("psi: summand outside {0,1}; rows do not interlace");
        }
        acc += term;
      }
      ++bottoms_left[slot.color];
    } else {
      ++tops_left[slot.color];
    }
  }
  if (!is_interlacing(bottom, top)) throw ContractViolation("psi: rows do not interlace");
  return acc;
}

long long psi_total(const Triangle& t) {
  long long total = 0;
  for (int k = 1; k < t.depth(); ++k) total += psi_vertex(t.level(k), t.level(k + 1));
  return total;
}

}  // namespace ctri
