#include "ctri/q_enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "ctri/enumeration.hpp"
#include "ctri/parallel.hpp"
#include "ctri/psi.hpp"

namespace ctri {

namespace {

void require_palette(int n) {
  if (n < 1 || n > kMaxQPolyColors) {
    throw std::invalid_argument("depth-2 q-enumeration supports 1.." + std::to_string(kMaxQPolyColors) +
                                " colors");
  }
}

QPolynomial from_u128(const std::vector<unsigned __int128>& acc) {
  std::vector<BigInt> coeffs(acc.size());
  for (std::size_t d = 0; d < acc.size(); ++d) {
    const auto hi = static_cast<std::uint64_t>(acc[d] >> 64);
    const auto lo = static_cast<std::uint64_t>(acc[d]);
    coeffs[d] = (BigInt(hi) << 64) + lo;
  }
  return QPolynomial(std::move(coeffs));
}

// For a top row over the identity bottom row, colmask[x] holds the colors c
// such that x is active when the bottom entry c is inserted. Under a color
// relabeling pi, psi = #{(c, x) : x in A_c, pi(x) > pi(c)}; the data does not
// depend on pi.
std::vector<std::uint32_t> incidence_columns(std::span<const Color> top, int n) {
  std::vector<std::uint32_t> colmask(static_cast<std::size_t>(n), 0);
  std::uint32_t active = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  for (int i = n - 1; i >= 0; --i) {
    active &= ~(std::uint32_t{1} << (top[static_cast<std::size_t>(2 * i + 1)] - 1));
    for (std::uint32_t rest = active; rest; rest &= rest - 1) {
      colmask[static_cast<std::size_t>(std::countr_zero(rest))] |= std::uint32_t{1} << i;
    }
    active |= std::uint32_t{1} << i;
    active &= ~(std::uint32_t{1} << (top[static_cast<std::size_t>(2 * i)] - 1));
  }
  return colmask;
}

// Sum over all n! relabelings pi of q^psi, assigning values in increasing order
// over subsets S of already-labeled colors.
void relabeling_sum(const std::vector<std::uint32_t>& colmask, int n, std::uint64_t weight,
                    std::vector<std::uint64_t>& table, std::vector<unsigned __int128>& acc) {
  const std::size_t width = acc.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::fill(table.begin(), table.end(), 0);
  table[0] = 1;
  for (std::uint32_t s = 0; s < full; ++s) {
    const std::uint64_t* src = &table[s * width];
    const int size = std::popcount(s);
    const std::size_t reach = static_cast<std::size_t>(size * (size - 1) / 2);
    for (std::uint32_t open = full & ~s; open; open &= open - 1) {
      const int x = std::countr_zero(open);
      const int shift = std::popcount(colmask[static_cast<std::size_t>(x)] & s);
      std::uint64_t* dst = &table[(s | (std::uint32_t{1} << x)) * width + static_cast<std::size_t>(shift)];
      for (std::size_t d = 0; d <= reach; ++d) dst[d] += src[d];
    }
  }
  const std::uint64_t* last = &table[full * width];
  for (std::size_t d = 0; d < width; ++d) acc[d] += static_cast<unsigned __int128>(last[d]) * weight;
}

}  // namespace

std::vector<std::vector<Color>> canonical_top_rows(int n) {
  require_palette(n);
  const Row bottom = Row::staircase(n, 1);
  ExtensionPlan plan(n, 1, bottom.entries(), true);
  std::vector<std::vector<Color>> out;
  plan.for_each([&](std::span<const Color> top) { out.emplace_back(top.begin(), top.end()); });
  return out;
}

QPolynomial t2_q_polynomial(int n, int threads) {
  require_palette(n);
  const std::size_t width = static_cast<std::size_t>(n * (n - 1) / 2 + 1);

  // Tops with identical incidence data contribute identically.
  std::map<std::vector<std::uint32_t>, std::uint64_t> groups;
  {
    const Row bottom = Row::staircase(n, 1);
    ExtensionPlan plan(n, 1, bottom.entries(), true);
    plan.for_each([&](std::span<const Color> top) { ++groups[incidence_columns(top, n)]; });
  }
  std::vector<const std::pair<const std::vector<std::uint32_t>, std::uint64_t>*> work;
  work.reserve(groups.size());
  for (const auto& g : groups) work.push_back(&g);

  threads = std::max(1, threads);
  std::vector<std::vector<unsigned __int128>> acc(static_cast<std::size_t>(threads),
                                                  std::vector<unsigned __int128>(width, 0));
  std::vector<std::vector<std::uint64_t>> tables(static_cast<std::size_t>(threads));
  parallel_for(work.size(), threads, [&](int w, std::size_t i) {
    auto& table = tables[static_cast<std::size_t>(w)];
    if (table.empty()) table.assign((std::size_t{1} << n) * width, 0);
    relabeling_sum(work[i]->first, n, work[i]->second, table, acc[static_cast<std::size_t>(w)]);
  });
  std::vector<unsigned __int128> total(width, 0);
  for (const auto& a : acc) {
    for (std::size_t d = 0; d < width; ++d) total[d] += a[d];
  }
  QPolynomial canonical = from_u128(total);
  return canonical * (BigInt(1) << (n - 1));
}

QPolynomial p_polynomial(int n, int threads) {
  const QPolynomial t2 = t2_q_polynomial(n, threads);
  auto p = t2.divide_exact(BigInt(1) << (n - 1));
  if (!p) throw std::logic_error("T_2(n;q) is not divisible by 2^(n-1)");
  return *p;
}

std::vector<QPolynomial> t2_sequence(int max_n, int threads) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  std::vector<QPolynomial> seq{QPolynomial::constant(1)};
  for (int n = 1; n <= max_n; ++n) seq.push_back(t2_q_polynomial(n, threads));
  return seq;
}

QPolynomial h_sigma_polynomial(std::span<const Color> sigma) {
  const int n = static_cast<int>(sigma.size());
  require_palette(n);
  require_color_permutation(sigma, n);
  const Row identity = Row::staircase(n, 1);
  ExtensionPlan plan(n, 1, identity.entries(), false);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  std::vector<Color> relabeled(static_cast<std::size_t>(2 * n));
  plan.for_each([&](std::span<const Color> top) {
    for (std::size_t p = 0; p < top.size(); ++p) relabeled[p] = sigma[top[p] - 1u];
    ++hist[static_cast<std::size_t>(psi_scan(n, 1, sigma, relabeled))];
  });
  return QPolynomial(std::vector<BigInt>(hist.begin(), hist.end()));
}

namespace {

// Joint right-to-left search over a depth-2 merged row. For bottom position j
// (0-based) the slots read T(2j), B(j), T(2j+1) left to right, so the scan visits
// T(2j+1), B(j), T(2j) and then moves to j-1. Per color we track how many of its
// three entries have been placed: s0 none (active), s1 right top only
// (inactive), s2 top and bottom (active again); a color with all three placed is
// in none of the masks. The contribution of a bottom entry only depends on
// what lies to its right, so the running psi is final for the scanned part
// and never decreases: pruning at psi >= k_max is exact.
struct LowSearch {
  int n;
  int k_max;
  int inv_cap;  // < 0: no cap
  struct State {
    std::uint32_t s0, s1, s2, placed;
    int psi, inv;
    Color last_top;  // 1-based color of the previous top slot, 0 if none
  };
  struct Slot {
    bool top;
    bool below_previous;  // top slot that must hold a smaller color than the previous top
  };
  std::vector<Slot> slots;

  LowSearch(int n_, int k, int cap) : n(n_), k_max(k), inv_cap(cap) {
    for (int j = n - 1; j >= 0; --j) {
      slots.push_back({true, j < n - 1});
      slots.push_back({false, false});
      slots.push_back({true, false});
    }
  }

  State initial() const {
    return State{(std::uint32_t{1} << n) - 1, 0, 0, 0, 0, 0, 0};
  }

  template <class Leaf>
  void walk(std::size_t pos, const State& st, std::uint64_t& nodes, std::size_t stop, Leaf&& leaf) const {
    ++nodes;
    if (pos == stop) {
      leaf(st);
      return;
    }
    const Slot& slot = slots[pos];
    if (slot.top) {
      std::uint32_t choices = st.s0 | st.s2;
      if (slot.below_previous) choices &= (std::uint32_t{1} << (st.last_top - 1)) - 1;
      for (; choices; choices &= choices - 1) {
        const std::uint32_t bit = choices & (~choices + 1);
        State next = st;
        if (st.s0 & bit) {
          next.s0 ^= bit;
          next.s1 |= bit;
        } else {
          next.s2 ^= bit;
        }
        next.last_top = static_cast<Color>(std::countr_zero(bit) + 1);
        walk(pos + 1, next, nodes, stop, leaf);
      }
      return;
    }
    const std::uint32_t active = st.s0 | st.s2;
    for (std::uint32_t choices = st.s1; choices; choices &= choices - 1) {
      const int c = std::countr_zero(choices);
      const std::uint32_t bit = std::uint32_t{1} << c;
      const int gain = std::popcount(active >> (c + 1));
      const int psi = st.psi + gain;
      if (psi >= k_max) continue;
      const int inv = st.inv + std::popcount(st.placed & (bit - 1));
      if (inv_cap >= 0 && inv > inv_cap) continue;
      State next = st;
      next.s1 ^= bit;
      next.s2 |= bit;
      next.placed |= bit;
      next.psi = psi;
      next.inv = inv;
      walk(pos + 1, next, nodes, stop, leaf);
    }
  }
};

}  // namespace

LowCoefficients low_coefficients(int n, int k_max, std::optional<int> inv_cap, int threads) {
  if (n < 1 || n > 31) throw std::invalid_argument("low_coefficients supports 1..31 colors");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (inv_cap && *inv_cap < 0) throw std::invalid_argument("inv_cap must be nonnegative");
  LowSearch search(n, k_max, inv_cap ? *inv_cap : -1);

  // Split the tree into independent subtrees for the workers.
  const std::size_t split = std::min<std::size_t>(search.slots.size(), 6);
  std::vector<LowSearch::State> seeds;
  LowCoefficients out;
  search.walk(0, search.initial(), out.nodes, split, [&](const LowSearch::State& st) { seeds.push_back(st); });

  threads = std::max(1, threads);
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(threads),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(k_max), 0));
  std::vector<std::uint64_t> nodes(static_cast<std::size_t>(threads), 0);
  const std::size_t end = search.slots.size();
  parallel_for(seeds.size(), threads, [&](int w, std::size_t i) {
    auto& local = counts[static_cast<std::size_t>(w)];
    search.walk(split, seeds[i], nodes[static_cast<std::size_t>(w)], end, [&](const LowSearch::State& st) {
      if (st.s0 | st.s1 | st.s2) throw std::logic_error("low_coefficients: incomplete leaf");
      ++local[static_cast<std::size_t>(st.psi)];
    });
  });
  out.coeffs.assign(static_cast<std::size_t>(k_max), 0);
  for (int w = 0; w < threads; ++w) {
    out.nodes += nodes[static_cast<std::size_t>(w)];
    for (int d = 0; d < k_max; ++d) out.coeffs[static_cast<std::size_t>(d)] += counts[static_cast<std::size_t>(w)][static_cast<std::size_t>(d)];
  }
  out.heuristic = inv_cap.has_value();
  return out;
}

bool a1_check(int n, int threads) {
  if (n < 3) throw std::invalid_argument("a1_check needs n >= 3");
  const LowCoefficients low = low_coefficients(n, 2, std::nullopt, threads);
  return low.coeffs[1] == BigInt(5 * (n - 2));
}

RationalPolynomialInN fit_coefficient_polynomial(int k, std::span<const std::pair<int, BigInt>> samples,
                                                 int threshold) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  std::set<int> seen;
  for (const auto& [n, value] : samples) {
    if (n < threshold) {
      throw std::invalid_argument("sample n = " + std::to_string(n) + " lies below the threshold " +
                                  std::to_string(threshold));
    }
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate sample n = " + std::to_string(n));
  }
  const std::size_t need = static_cast<std::size_t>(k) + 1;
  if (samples.size() < need) {
    throw std::invalid_argument("degree " + std::to_string(k) + " needs at least " + std::to_string(need) +
                                " samples");
  }
  // Newton divided differences over the first k+1 samples.
  std::vector<Rational> x(need), dd(need);
  for (std::size_t i = 0; i < need; ++i) {
    x[i] = samples[i].first;
    dd[i] = Rational(samples[i].second);
  }
  for (std::size_t level = 1; level < need; ++level) {
    for (std::size_t i = need - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);
  }
  RationalPolynomialInN poly;
  RationalPolynomialInN basis = RationalPolynomialInN::constant(1);
  for (std::size_t i = 0; i < need; ++i) {
    poly += basis * dd[i];
    basis *= RationalPolynomialInN(std::vector<Rational>{-x[i], Rational(1)});
  }
  for (std::size_t i = need; i < samples.size(); ++i) {
    const Rational at = poly.evaluate(samples[i].first);
    if (at != Rational(samples[i].second)) {
      throw InconsistentSamples("sample n = " + std::to_string(samples[i].first) + " has value " +
                                samples[i].second.str() + " but the degree-" + std::to_string(k) +
                                " fit predicts " + at.str());
    }
  }
  return poly;
}

bool leading_coefficient_check(const RationalPolynomialInN& poly, int k) {
  if (k < 0 || poly.degree() != k) return false;
  const RationalPolynomialInN scaled = poly * Rational(factorial(k));
  if (!scaled.has_integer_coefficients()) return false;
  return scaled.coeff(k) == Rational(boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(k)));
}

std::vector<RationalPolynomialInN> moments_to_cumulants(std::span<const RationalPolynomialInN> moments) {
  if (moments.empty() || moments[0] != RationalPolynomialInN::constant(1)) {
    throw std::invalid_argument("moments must start with m_0 = 1");
  }
  const std::size_t K = moments.size() - 1;
  std::vector<RationalPolynomialInN> kappa(K + 1);
  for (std::size_t k = 1; k <= K; ++k) {
    RationalPolynomialInN value = moments[k];
    BigInt binom = 1;  // C(k-1, j-1)
    for (std::size_t j = 1; j < k; ++j) {
      value -= kappa[j] * moments[k - j] * Rational(binom);
      binom = binom * static_cast<long long>(k - 1 - (j - 1)) / static_cast<long long>(j);
    }
    kappa[k] = value;
  }
  return kappa;
}

QPolynomial hankel_determinant(std::span<const QPolynomial> seq, int k, int offset) {
  if (k < 1) throw std::invalid_argument("Hankel size must be at least 1");
  if (offset < 0) throw std::invalid_argument("Hankel offset must be nonnegative");
  const std::size_t need = static_cast<std::size_t>(2 * k - 1 + offset);
  if (seq.size() < need) {
    throw std::invalid_argument("Hankel determinant of size " + std::to_string(k) + " needs " +
                                std::to_string(need) + " sequence terms");
  }
  const std::size_t m = static_cast<std::size_t>(k);
  std::vector<std::vector<QPolynomial>> a(m, std::vector<QPolynomial>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = seq[i + j + static_cast<std::size_t>(offset)];
  }
  // Bareiss: after step p every entry below/right of the pivot is a minor of the
  // original matrix, so the division by the previous pivot is exact in Z[q].
  bool negate = false;
  QPolynomial previous = QPolynomial::constant(1);
  for (std::size_t p = 0; p < m; ++p) {
    if (a[p][p].is_zero()) {
      std::size_t r = p + 1;
      while (r < m && a[r][p].is_zero()) ++r;
      if (r == m) return QPolynomial{};
      std::swap(a[p], a[r]);
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < m; ++i) {
      for (std::size_t j = p + 1; j < m; ++j) {
        const QPolynomial num = a[p][p] * a[i][j] - a[i][p] * a[p][j];
        auto q = num.divide_exact(previous);
        if (!q) throw std::logic_error("Bareiss step is not exact");
        a[i][j] = std::move(*q);
      }
      a[i][p] = QPolynomial{};
    }
    previous = a[p][p];
  }
  QPolynomial det = a[m - 1][m - 1];
  if (negate) det *= BigInt(-1);
  return det;
}

std::optional<RootEstimate> smallest_positive_root(const QPolynomial& poly, double tolerance, int grid) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 cells");
  if (poly.is_zero()) throw std::invalid_argument("the zero polynomial has no isolated roots");
  int lowest = 0;
  while (poly.coeff(lowest) == 0) ++lowest;
  int previous = poly.coeff(lowest).sign();

  auto sign_at = [&](const Rational& r) {
    return poly.sign_at(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
  };
  for (int i = 1; i < grid; ++i) {
    const Rational point(i, grid);
    const int s = sign_at(point);
    if (s == 0) {
      return RootEstimate{point.convert_to<double>(), point, point};
    }
    if (s == previous) continue;
    Rational lo(i - 1, grid), hi = point;
    const Rational tol(tolerance);
    while (hi - lo > tol) {
      const Rational mid = (lo + hi) / 2;
      const int sm = sign_at(mid);
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      (sm == previous ? lo : hi) = mid;
    }
    const Rational centre = (lo + hi) / 2;
    return RootEstimate{centre.convert_to<double>(), lo, hi};
  }
  return std::nullopt;
}

HankelReport hankel_report(int k, int offset, double tolerance, int threads) {
  if (offset != 0 && offset != 1) throw std::invalid_argument("offset must be 0 or 1");
  const std::vector<QPolynomial> seq = t2_sequence(2 * k - 2 + offset, threads);
  HankelReport report;
  report.k = k;
  report.offset = offset;
  report.determinant = hankel_determinant(seq, k, offset);
  if (!report.determinant.is_zero()) {
    report.smallest_positive_root = smallest_positive_root(report.determinant, tolerance);
  }
  return report;
}

}  // namespace ctri
