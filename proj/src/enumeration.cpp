#include "ctri/enumeration.hpp"

#include <bit>
#include <chrono>
#include <unordered_map>

#include "ctri/parallel.hpp"

namespace ctri {

ExtensionPlan::ExtensionPlan(int palette, int bottom_level, std::span<const Color> bottom, bool canonical)
    : n_(palette), k_(bottom_level), canonical_(canonical), mask_count_(0) {
  if (palette < 1 || palette > kMaxPalette) {
    throw std::invalid_argument("extension plans support 1.." + std::to_string(kMaxPalette) + " colors");
  }
  if (bottom_level < 1) throw std::invalid_argument("bottom level must be at least 1");
  if (bottom.size() != static_cast<std::size_t>(palette * bottom_level)) {
    throw std::invalid_argument("bottom row has the wrong length");
  }
  mask_count_ = std::size_t{1} << palette;
  slots_.reserve(static_cast<std::size_t>(palette * (2 * bottom_level + 1)));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j <= k_; ++j) {
      slots_.push_back(Slot{true, 0, i * (k_ + 1) + j, canonical_ && i > 0 && j == 0});
      if (j < k_) {
        const Color c = bottom[static_cast<std::size_t>(i * k_ + j)];
        if (c < 1 || c > n_) throw std::invalid_argument("bottom color outside the palette");
        slots_.push_back(Slot{false, c, -1, false});
      }
    }
  }
}

std::vector<std::uint8_t> ExtensionPlan::reachability() const {
  const std::size_t L = slots_.size();
  const std::uint32_t full = static_cast<std::uint32_t>(mask_count_ - 1);
  std::vector<std::uint8_t> ok((L + 1) * mask_count_, 0);
  ok[L * mask_count_ + full] = 1;
  for (std::size_t pos = L; pos-- > 0;) {
    const Slot& s = slots_[pos];
    const std::uint8_t* next = &ok[(pos + 1) * mask_count_];
    std::uint8_t* cur = &ok[pos * mask_count_];
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (s.top) {
        std::uint32_t open = full & ~mask;
        while (open) {
          const std::uint32_t bit = open & (~open + 1);
          if (next[mask | bit]) {
            cur[mask] = 1;
            break;
          }
          open ^= bit;
        }
      } else {
        const std::uint32_t bit = std::uint32_t{1} << (s.color - 1);
        cur[mask] = (mask & bit) && next[mask ^ bit];
      }
    }
  }
  return ok;
}

void ExtensionPlan::for_each(const std::function<void(std::span<const Color>)>& visit) const {
  const std::vector<std::uint8_t> ok = reachability();
  std::vector<Color> top(static_cast<std::size_t>(n_ * (k_ + 1)), 0);
  const std::size_t L = slots_.size();
  const std::size_t stride = mask_count_;

  // Explicit recursion: depth is the number of merged slots.
  auto walk = [&](auto&& self, std::size_t pos, std::uint32_t mask) -> void {
    if (pos == L) {
      visit(top);
      return;
    }
    const Slot& s = slots_[pos];
    const std::uint8_t* next = &ok[(pos + 1) * stride];
    if (!s.top) {
      self(self, pos + 1, mask ^ (std::uint32_t{1} << (s.color - 1)));
      return;
    }
    const int lowest = s.pair_second ? top[static_cast<std::size_t>(s.top_index - 1)] + 1 : 1;
    for (int c = lowest; c <= n_; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << (c - 1);
      if ((mask & bit) || !next[mask | bit]) continue;
      top[static_cast<std::size_t>(s.top_index)] = static_cast<Color>(c);
      self(self, pos + 1, mask | bit);
    }
  };
  if (ok[0]) walk(walk, 0, 0);
}

std::uint64_t ExtensionPlan::count() const {
  const std::uint32_t full = static_cast<std::uint32_t>(mask_count_ - 1);
  std::vector<std::uint64_t> cur(mask_count_, 0), next(mask_count_, 0);
  cur[0] = 1;
  auto add = [](std::uint64_t& dst, std::uint64_t v) {
    if (__builtin_add_overflow(dst, v, &dst)) throw std::overflow_error("extension count overflows 64 bits");
  };
  for (std::size_t pos = 0; pos < slots_.size(); ++pos) {
    const Slot& s = slots_[pos];
    std::fill(next.begin(), next.end(), 0);
    const bool paired = pos + 1 < slots_.size() && slots_[pos + 1].pair_second;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      const std::uint64_t v = cur[mask];
      if (!v) continue;
      if (!s.top) {
        const std::uint32_t bit = std::uint32_t{1} << (s.color - 1);
        if (mask & bit) add(next[mask ^ bit], v);
        continue;
      }
      std::uint32_t open = full & ~mask;
      if (!paired) {
        while (open) {
          const std::uint32_t bit = open & (~open + 1);
          add(next[mask | bit], v);
          open ^= bit;
        }
        continue;
      }
      // Last top slot of triangle i together with the first of triangle i+1:
      // an increasing pair of distinct open colors.
      while (open) {
        const std::uint32_t low = open & (~open + 1);
        open ^= low;
        std::uint32_t rest = open;
        while (rest) {
          const std::uint32_t high = rest & (~rest + 1);
          add(next[mask | low | high], v);
          rest ^= high;
        }
      }
    }
    if (paired) ++pos;
    std::swap(cur, next);
  }
  return cur[full];
}

std::vector<Row> extensions(const Row& row, bool canonical) {
  ExtensionPlan plan(row.palette(), row.level(), row.entries(), canonical);
  std::vector<Row> out;
  plan.for_each([&](std::span<const Color> top) {
    out.emplace_back(row.palette(), row.level() + 1, std::vector<Color>(top.begin(), top.end()));
  });
  return out;
}

namespace {

int field_bits(int palette) { return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(palette)))); }

}  // namespace

std::string pack_row(std::span<const Color> entries, int palette) {
  const int bits = field_bits(palette);
  std::string out((entries.size() * static_cast<std::size_t>(bits) + 7) / 8, '\0');
  std::size_t bitpos = 0;
  for (Color c : entries) {
    for (int b = 0; b < bits; ++b, ++bitpos) {
      if ((c >> b) & 1U) out[bitpos / 8] = static_cast<char>(out[bitpos / 8] | (1 << (bitpos % 8)));
    }
  }
  return out;
}

std::vector<Color> unpack_row(const std::string& key, int palette, std::size_t length) {
  const int bits = field_bits(palette);
  std::vector<Color> out(length, 0);
  std::size_t bitpos = 0;
  for (std::size_t i = 0; i < length; ++i) {
    unsigned v = 0;
    for (int b = 0; b < bits; ++b, ++bitpos) {
      if ((static_cast<unsigned char>(key[bitpos / 8]) >> (bitpos % 8)) & 1U) v |= 1U << b;
    }
    out[i] = static_cast<Color>(v);
  }
  return out;
}

namespace {

using Frontier = std::unordered_map<std::string, BigInt>;

void check_endpoints(std::span<const Color> row, int n) {
  if (row.front() != 1 || row.back() != n) {
    throw std::logic_error("frontier row does not start with color 1 and end with color n");
  }
}

}  // namespace

CountReport count_triangles(int depth, int palette, const CountOptions& options) {
  if (depth < 1 || palette < 1) throw std::invalid_argument("depth and palette must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const int n = palette;
  const int threads = std::max(1, options.threads);
  const std::size_t batch = std::max<std::size_t>(1, options.batch_size);

  CountReport report;
  report.depth = depth;
  report.palette = palette;

  Frontier frontier;
  frontier.emplace(pack_row(Row::staircase(n, 1).entries(), n), BigInt(1));
  report.frontier_sizes.push_back(1);
  if (options.on_level) options.on_level(1, 1);

  std::uint64_t checked = 0;
  // Materialize levels 2..N-1.
  for (int k = 1; k + 1 < depth; ++k) {
    std::vector<const Frontier::value_type*> sources;
    sources.reserve(frontier.size());
    for (const auto& entry : frontier) sources.push_back(&entry);

    Frontier next;
    const std::size_t row_len = static_cast<std::size_t>(n * k);
    for (std::size_t begin = 0; begin < sources.size(); begin += batch) {
      const std::size_t end = std::min(sources.size(), begin + batch);
      std::vector<Frontier> partial(static_cast<std::size_t>(threads));
      std::vector<std::uint64_t> produced(static_cast<std::size_t>(threads), 0);
      parallel_for(end - begin, threads, [&](int w, std::size_t idx) {
        const auto* src = sources[begin + idx];
        const std::vector<Color> row = unpack_row(src->first, n, row_len);
        check_endpoints(row, n);
        ExtensionPlan plan(n, k, row, false);
        Frontier& local = partial[static_cast<std::size_t>(w)];
        plan.for_each([&](std::span<const Color> top) {
          local[pack_row(top, n)] += src->second;
          ++produced[static_cast<std::size_t>(w)];
        });
      });
      for (std::size_t w = 0; w < partial.size(); ++w) {
        checked += produced[w];
        for (auto& [key, mult] : partial[w]) next[key] += mult;
        partial[w].clear();
      }
      if (next.size() > options.max_frontier) {
        throw ResourceLimitExceeded("frontier at level " + std::to_string(k + 1) + " exceeds " +
                                        std::to_string(options.max_frontier) + " rows",
                                    k + 1, next.size());
      }
    }
    frontier = std::move(next);
    report.frontier_sizes.push_back(frontier.size());
    if (options.on_level) options.on_level(k + 1, frontier.size());
  }

  BigInt canonical_total = 0;
  if (depth == 1) {
    canonical_total = 1;
  } else {
    const int k = depth - 1;
    const bool sym = options.use_top_symmetry;
    std::vector<const Frontier::value_type*> sources;
    sources.reserve(frontier.size());
    for (const auto& entry : frontier) sources.push_back(&entry);
    const std::size_t row_len = static_cast<std::size_t>(n * k);
    for (std::size_t begin = 0; begin < sources.size(); begin += batch) {
      const std::size_t end = std::min(sources.size(), begin + batch);
      std::vector<BigInt> partial(static_cast<std::size_t>(threads), 0);
      parallel_for(end - begin, threads, [&](int w, std::size_t idx) {
        const auto* src = sources[begin + idx];
        const std::vector<Color> row = unpack_row(src->first, n, row_len);
        check_endpoints(row, n);
        ExtensionPlan plan(n, k, row, sym);
        partial[static_cast<std::size_t>(w)] += src->second * plan.count();
      });
      for (const auto& p : partial) canonical_total += p;
      checked += end - begin;
    }
    if (sym) canonical_total <<= (n - 1);
  }

  report.normalized = canonical_total;
  report.total = canonical_total * factorial(n);
  report.two_adic = two_adic_valuation(report.normalized);
  report.states_checked = checked;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int two_adic_valuation(const BigInt& x) {
  if (x.sign() <= 0) throw std::domain_error("2-adic valuation needs a positive integer");
  return static_cast<int>(boost::multiprecision::lsb(x));
}

bool divisor_check(const BigInt& x, const BigInt& d) {
  if (x.sign() <= 0 || d.sign() <= 0) throw std::domain_error("divisor_check needs positive arguments");
  return BigInt(x % d) == 0;
}

}  // namespace ctri
