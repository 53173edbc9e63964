#include "ctri/dumont.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctri/parallel.hpp"

namespace ctri {

namespace {

void require_permutation(std::span<const int> sigma) {
  if (sigma.size() % 2 != 0) throw std::invalid_argument("Dumont permutations have even length");
  std::vector<std::uint8_t> seen(sigma.size() + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of {1..2n}");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

bool dumont_inequalities(std::span<const int> sigma) {
  for (std::size_t idx = 0; idx < sigma.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    if (i % 2 == 1 ? !(sigma[idx] > i) : !(sigma[idx] < i)) return false;
  }
  return true;
}

// Backtracking over sigma(1), sigma(2), ... with the parity interval constraint.
struct DumontWalker {
  int m;
  std::vector<int> sigma;
  std::vector<std::uint8_t> used;
  const std::function<void(std::span<const int>)>& visit;

  DumontWalker(int n, const std::function<void(std::span<const int>)>& v)
      : m(2 * n), sigma(static_cast<std::size_t>(2 * n)), used(static_cast<std::size_t>(2 * n) + 1, 0), visit(v) {}

  void place(int i, int first_value) {
    if (i > m) {
      visit(sigma);
      return;
    }
    int lo, hi;
    if (i % 2 == 1) {
      lo = i + 1;
      hi = m;
    } else {
      lo = 1;
      hi = i - 1;
    }
    if (i == 1 && first_value) lo = hi = first_value;
    for (int v = lo; v <= hi; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      sigma[static_cast<std::size_t>(i - 1)] = v;
      if (feasible_after(i)) place(i + 1, 0);
      used[static_cast<std::size_t>(v)] = 0;
    }
  }

  // After fixing positions 1..i, every unused value v <= i can only go to an even
  // position > v, i.e. a later even position. Require enough later even slots.
  bool feasible_after(int i) const {
    int small_unused = 0;
    for (int v = 1; v <= i; ++v) small_unused += used[static_cast<std::size_t>(v)] ? 0 : 1;
    const int later_even = m / 2 - i / 2;
    return small_unused <= later_even;
  }
};

}  // namespace

DumontPermutation::DumontPermutation(std::vector<int> one_line) : sigma_(std::move(one_line)) {
  if (!is_dumont(sigma_)) throw std::invalid_argument("permutation violates the Dumont inequalities");
}

bool is_dumont(std::span<const int> sigma) {
  require_permutation(sigma);
  return dumont_inequalities(sigma);
}

long long inversion_count(std::span<const int> perm) {
  long long inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j] ? 1 : 0;
  }
  return inv;
}

void for_each_dumont(int n, const std::function<void(std::span<const int>)>& visit, int first_value) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) {
    visit(std::span<const int>{});
    return;
  }
  DumontWalker w(n, visit);
  w.place(1, first_value);
}

BigInt count_dumont(int n, int threads) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n <= 1) return 1;
  // Partition by sigma(1) in {2..2n}; partitions are independent.
  const int parts = 2 * n - 1;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(parts), 0);
  auto work = [&](int part) {
    std::uint64_t local = 0;
    for_each_dumont(n, [&](std::span<const int>) { ++local; }, part + 2);
    counts[static_cast<std::size_t>(part)] = local;
  };
  parallel_for(static_cast<std::size_t>(parts), threads, [&](int, std::size_t p) { work(static_cast<int>(p)); });
  BigInt total = 0;
  for (auto c : counts) total += c;
  return total;
}

DumontPermutation top_row_to_dumont(const Row& top) {
  const int n = top.palette();
  if (top.level() != 2) throw std::invalid_argument("expected a level-2 row");
  const Row identity = Row::staircase(n, 1);
  if (!is_interlacing(identity, top)) {
    throw std::invalid_argument("top row does not interlace with the identity bottom row");
  }
  std::vector<int> sigma(static_cast<std::size_t>(2 * n), 0);
  std::vector<int> first(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t p = 0; p < top.size(); ++p) {
    const Color c = top[p];
    const int pos = static_cast<int>(p) + 1;
    if (!first[c]) {
      first[c] = pos;
      sigma[static_cast<std::size_t>(2 * c - 1)] = pos;  // sigma(2c) = p1
    } else {
      sigma[static_cast<std::size_t>(2 * c - 2)] = pos;  // sigma(2c-1) = p2
    }
  }
  return DumontPermutation(std::move(sigma));
}

Row dumont_to_top_row(const DumontPermutation& sigma) {
  const int n = sigma.half_size();
  std::vector<Color> top(static_cast<std::size_t>(2 * n), 0);
  for (int c = 1; c <= n; ++c) {
    top[static_cast<std::size_t>(sigma(2 * c) - 1)] = static_cast<Color>(c);
    top[static_cast<std::size_t>(sigma(2 * c - 1) - 1)] = static_cast<Color>(c);
  }
  Row row(n, 2, std::move(top));
  if (!is_interlacing(Row::staircase(n, 1), row)) {
    throw std::logic_error("Dumont image does not interlace with the identity bottom row");
  }
  return row;
}

QPolynomial q_analog_randrianarivony(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<std::uint64_t> counts;
  for_each_dumont(n, [&](std::span<const int> sigma) {
    const auto inv = static_cast<std::size_t>(inversion_count(sigma));
    if (counts.size() <= inv) counts.resize(inv + 1, 0);
    ++counts[inv];
  });
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return QPolynomial(std::move(coeffs));
}

namespace {

// Polynomial in x whose coefficients are polynomials in q.
using XPoly = std::vector<QPolynomial>;

XPoly substitute_one_plus_qx(const XPoly& f) {
  // f(1 + qx) = sum_j f_j sum_i C(j, i) q^i x^i
  XPoly out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    BigInt binom = 1;
    for (std::size_t i = 0; i <= j; ++i) {
      out[i] += f[j] * QPolynomial::monomial(static_cast<int>(i), binom);
      binom = binom * static_cast<long long>(j - i) / static_cast<long long>(i + 1);
    }
  }
  return out;
}

XPoly q_difference(const XPoly& f) {
  XPoly g = substitute_one_plus_qx(f);
  for (std::size_t j = 0; j < f.size(); ++j) g[j] -= f[j];
  while (!g.empty() && g.back().is_zero()) g.pop_back();
  if (g.empty()) return {};
  // Divide by 1 + (q - 1) x, solving from the constant term upward.
  const QPolynomial q_minus_one{-1, 1};
  XPoly h(g.size() - 1);
  for (std::size_t j = 0; j + 1 < g.size(); ++j) {
    h[j] = g[j];
    if (j > 0) h[j] -= q_minus_one * h[j - 1];
  }
  const QPolynomial top = h.empty() ? QPolynomial{} : q_minus_one * h.back();
  if (top != g.back()) throw std::logic_error("q-difference quotient is not exact");
  return h;
}

}  // namespace

QPolynomial q_analog_han_zeng(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  XPoly c{QPolynomial::constant(1)};
  for (int m = 2; m <= n; ++m) {
    XPoly xc(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) xc[j + 1] = c[j];
    XPoly d = q_difference(xc);
    XPoly next(d.size() + 1);
    for (std::size_t j = 0; j < d.size(); ++j) {
      next[j] += d[j];
      next[j + 1] += d[j] * QPolynomial{0, 1};
    }
    c = std::move(next);
  }
  QPolynomial at_one;
  for (const auto& coeff : c) at_one += coeff;
  return at_one;
}

QPolynomial q_analog_zeng_zhou(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  // Row m has floor((m + 1) / 2) entries g_{m,1..}; entries outside are zero.
  auto width = [](int m) { return (m + 1) / 2; };
  std::vector<QPolynomial> prev{QPolynomial::constant(1)};  // row 1
  if (n == 1) {
    // g_{2,1} = 1
    return QPolynomial::constant(1);
  }
  for (int m = 2; m <= 2 * n; ++m) {
    const int w = width(m);
    std::vector<QPolynomial> row(static_cast<std::size_t>(w));
    auto prev_at = [&](int j) -> QPolynomial {
      return (j >= 1 && j <= static_cast<int>(prev.size())) ? prev[static_cast<std::size_t>(j - 1)] : QPolynomial{};
    };
    if (m % 2 == 1) {
      // g_{m,j} = g_{m,j-1} + q^{j-1} g_{m-1,j}, left to right.
      QPolynomial left;
      for (int j = 1; j <= w; ++j) {
        left = left + QPolynomial::monomial(j - 1) * prev_at(j);
        row[static_cast<std::size_t>(j - 1)] = left;
      }
    } else {
      // g_{m,j} = g_{m,j+1} + q^{j-1} g_{m-1,j}, right to left.
      QPolynomial right;
      for (int j = w; j >= 1; --j) {
        right = right + QPolynomial::monomial(j - 1) * prev_at(j);
        row[static_cast<std::size_t>(j - 1)] = right;
      }
    }
    prev = std::move(row);
  }
  return prev.front();
}

}  // namespace ctri
