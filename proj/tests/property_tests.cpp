// Invariant checks over exhaustively generated small instances. Every check
// compares two independent routes or tests a structural identity; no stored
// reference values are used.

#include "doctest.h"

#include <map>
#include <set>

#include "ctri/core_model.hpp"
#include "ctri/dumont.hpp"
#include "ctri/enumeration.hpp"
#include "ctri/psi.hpp"
#include "ctri/q_enumeration.hpp"
#include "ctri/sampler.hpp"
#include "oracles.hpp"

using namespace ctri;
using oracle::Flat;

namespace {

// Every interlacing (level k, level k+1) pair with an arbitrary level-k row.
template <class F>
void for_each_pair(int n, int k, F&& visit) {
  const auto tops = oracle::all_words(n, k + 1);
  for (const auto& b : oracle::all_words(n, k)) {
    for (const auto& t : tops) {
      if (oracle::interlaces(n, k, b, t)) visit(Row(n, k, b), Row(n, k + 1, t));
    }
  }
}

Triangle make_triangle(int n, const std::vector<Flat>& levels) {
  std::vector<Row> rows;
  for (std::size_t k = 0; k < levels.size(); ++k) rows.emplace_back(n, static_cast<int>(k) + 1, levels[k]);
  return Triangle(std::move(rows));
}

Flat complement(const Flat& w, int n) {
  Flat out;
  for (auto c : w) out.push_back(static_cast<Color>(n + 1 - c));
  return out;
}

}  // namespace

// ---- core model

TEST_CASE("core: validation agrees with the definition on every level chain, n <= 3, N <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto l2 = oracle::all_words(n, 2);
    for (const auto& b : oracle::all_words(n, 1)) {
      for (const auto& t : l2) {
        CHECK(validate_triangle(make_triangle(n, {b, t})) == oracle::interlaces(n, 1, b, t));
      }
    }
  }
  std::uint64_t valid = 0;
  oracle::for_each_triangle(3, 3, [&](const std::vector<Flat>& levels) {
    valid += validate_triangle(make_triangle(3, levels));
  });
  CHECK(valid == oracle::count_triangles(3, 3));
}

TEST_CASE("core: color permutations, complements and boundary swaps preserve validity") {
  for (int n = 2; n <= 3; ++n) {
    oracle::for_each_triangle(n, 3, [&](const std::vector<Flat>& levels) {
      const Triangle t = make_triangle(n, levels);
      ColorPermutation p = identity_permutation(n);
      std::rotate(p.begin(), p.begin() + 1, p.end());
      CHECK(validate_triangle(apply_color_permutation(t, p)));
      CHECK(validate_triangle(color_complement(t)));
      for (int i = 1; i < n; ++i) {
        const Triangle u = boundary_involution(t, i);
        CHECK(validate_triangle(u));
        CHECK(boundary_involution(u, i) == t);
      }
      const auto c = canonicalize_bottom(t);
      CHECK(c.triangle.level(1) == Row::staircase(n, 1));
      CHECK(validate_triangle(c.triangle));
    });
  }
}

// ---- psi

TEST_CASE("psi: vertex scan, double-sum formula and oracle agree; complement identity; bounds") {
  struct Scale {
    int n, k;
  };
  for (const Scale s : {Scale{1, 1}, Scale{2, 1}, Scale{3, 1}, Scale{4, 1}, Scale{1, 2}, Scale{2, 2}, Scale{3, 2}}) {
    CAPTURE(s.n);
    CAPTURE(s.k);
    long long lo = psi_upper_bound(s.n, s.k), hi = 0;
    for_each_pair(s.n, s.k, [&](const Row& b, const Row& t) {
      const long long v = psi_vertex(b, t);
      CHECK(v == psi_formula(b, t));
      const Flat bf(b.entries().begin(), b.entries().end()), tf(t.entries().begin(), t.entries().end());
      CHECK(v == oracle::psi(s.n, s.k, bf, tf));
      const Row bc(s.n, s.k, complement(bf, s.n)), tc(s.n, s.k + 1, complement(tf, s.n));
      CHECK(v + psi_vertex(bc, tc) == psi_upper_bound(s.n, s.k));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    });
    CHECK(lo == 0);
    CHECK(hi == psi_upper_bound(s.n, s.k));
  }
}

TEST_CASE("psi: every summand of the double sum is nonnegative") {
  for (int n = 2; n <= 4; ++n) {
    for_each_pair(n, 1, [&](const Row& b, const Row& t) {
      const auto m = merge_rows(b, t);
      std::vector<int> tops(static_cast<std::size_t>(n) + 1, 0), bots(static_cast<std::size_t>(n) + 1, 0);
      for (const auto& s : m.slots) {
        if (s.origin == SlotOrigin::Top) {
          ++tops[s.color];
          continue;
        }
        for (int d = s.color + 1; d <= n; ++d) CHECK(tops[static_cast<std::size_t>(d)] >= bots[static_cast<std::size_t>(d)]);
        ++bots[s.color];
      }
    });
  }
}

TEST_CASE("psi: total psi is invariant under boundary swaps of the top level, n <= 4, N = 2") {
  for (int n = 2; n <= 4; ++n) {
    for_each_pair(n, 1, [&](const Row& b, const Row& t) {
      const Triangle tri({b, t});
      for (int i = 1; i < n; ++i) CHECK(psi_total(boundary_involution(tri, i)) == psi_total(tri));
    });
  }
}

// ---- Dumont derangements

TEST_CASE("dumont: backtracking count equals filtering, bijection round trips") {
  for (int n = 0; n <= 5; ++n) {
    const auto filtered = n == 0 ? std::vector<std::vector<int>>{{}} : oracle::dumont_by_filter(n);
    CHECK(count_dumont(n) == filtered.size());
    CHECK(count_dumont(n, 3) == filtered.size());
    if (n == 0) continue;
    for (const auto& s : filtered) {
      const DumontPermutation d(s);
      CHECK(top_row_to_dumont(dumont_to_top_row(d)) == d);
    }
  }
  // every top row over the identity bottom maps to a Dumont derangement and back
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : oracle::all_words(n, 2)) {
      const Flat id(oracle::all_words(n, 1).front());
      if (!oracle::interlaces(n, 1, id, t)) continue;
      const Row top(n, 2, t);
      CHECK(dumont_to_top_row(top_row_to_dumont(top)) == top);
    }
  }
}

TEST_CASE("dumont: classical q-analogs specialize to the median count and are pairwise distinct") {
  for (int n = 1; n <= 6; ++n) {
    const BigInt h = count_dumont(n);
    CHECK(q_analog_randrianarivony(n).evaluate(BigInt(1)) == h);
    CHECK(q_analog_han_zeng(n).evaluate(BigInt(1)) == h);
    CHECK(q_analog_zeng_zhou(n).evaluate(BigInt(1)) == h);
    if (n >= 3) {
      CHECK(q_analog_randrianarivony(n) != q_analog_han_zeng(n));
      CHECK(q_analog_han_zeng(n) != q_analog_zeng_zhou(n));
      CHECK(q_analog_randrianarivony(n) != q_analog_zeng_zhou(n));
    }
  }
}

// ---- enumeration

TEST_CASE("enumeration: frontier DP equals brute force, with and without top symmetry") {
  struct Shape {
    int n, depth;
  };
  for (const Shape s : {Shape{1, 3}, Shape{2, 3}, Shape{2, 4}, Shape{3, 2}, Shape{3, 3}, Shape{4, 2}}) {
    const BigInt want = oracle::count_triangles(s.n, s.depth);
    CountOptions with, without;
    without.use_top_symmetry = false;
    CHECK(count_triangles(s.depth, s.n, with).total == want);
    CHECK(count_triangles(s.depth, s.n, without).total == want);
  }
  for (int n = 2; n <= 4; ++n) {
    for (int depth = 2; depth <= 3; ++depth) {
      CountOptions with, without;
      without.use_top_symmetry = false;
      CHECK(count_triangles(depth, n, with).total == count_triangles(depth, n, without).total);
    }
  }
}

TEST_CASE("enumeration: depth-2 counts factor through the median count; divisibility; n = 2 column") {
  for (int n = 1; n <= 6; ++n) CHECK(count_triangles(2, n).total == factorial(n) * count_dumont(n));
  for (int depth = 1; depth <= 8; ++depth) CHECK(count_triangles(depth, 2).total == (BigInt(1) << depth));
  for (int n = 2; n <= 4; ++n) {
    for (int depth = 2; depth <= (n == 4 ? 4 : 5); ++depth) {
      const auto r = count_triangles(depth, n);
      CHECK(r.normalized % (BigInt(1) << (n - 1)) == 0);
      CHECK(r.two_adic >= n - 1);
    }
  }
}

TEST_CASE("enumeration: thread count does not change results") {
  CountOptions one, four;
  four.threads = 4;
  for (int n = 3; n <= 4; ++n) {
    const auto a = count_triangles(3, n, one), b = count_triangles(3, n, four);
    CHECK(a.total == b.total);
    CHECK(a.frontier_sizes == b.frontier_sizes);
  }
}

TEST_CASE("enumeration: frontier rows start with 1 and end with n") {
  for (int n = 2; n <= 3; ++n) {
    oracle::for_each_triangle(n, 3, [&](const std::vector<Flat>& levels) {
      if (levels[0] != oracle::all_words(n, 1).front()) return;  // identity bottom only
      for (const auto& l : levels) {
        CHECK(l.front() == 1);
        CHECK(l.back() == n);
      }
    });
  }
}

// ---- q-enumeration

TEST_CASE("q: T_2(n; q) equals brute force; palindromic, right degree, divisible") {
  for (int n = 1; n <= 4; ++n) CHECK(t2_q_polynomial(n) == oracle::t2_poly(n));
  for (int n = 1; n <= 8; ++n) {
    const QPolynomial t = t2_q_polynomial(n, 2);
    const int d = n * (n - 1) / 2;
    CHECK(t.degree() == d);
    CHECK(palindrome_check(t, d));
    CHECK(t.divide_exact(BigInt(1) << (n - 1)).has_value());
    CHECK(t.evaluate(BigInt(1)) == factorial(n) * count_dumont(n));
    CHECK(t.coeff(0) == BigInt(1) << (n - 1));
  }
}

TEST_CASE("q: bottom-row refinements (complement reflection, q = 1 value, divisibility, psi >= 2 when inv >= 2)") {
  for (int n = 1; n <= 5; ++n) {
    const BigInt h = count_dumont(n);
    const int d = n * (n - 1) / 2;
    std::vector<Color> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = static_cast<Color>(i + 1);
    QPolynomial total;
    do {
      const QPolynomial hs = h_sigma_polynomial(sigma);
      total += hs;
      CHECK(hs.evaluate(BigInt(1)) == h);
      CHECK(hs.divide_exact(BigInt(1) << (n - 1)).has_value());
      std::vector<Color> bar;
      for (auto c : sigma) bar.push_back(static_cast<Color>(n + 1 - c));
      const QPolynomial hb = h_sigma_polynomial(bar);
      for (int j = 0; j <= d; ++j) CHECK(hb.coeff(j) == hs.coeff(d - j));
      std::vector<int> as_int(sigma.begin(), sigma.end());
      if (inversion_count(as_int) >= 2) {
        CHECK(hs.coeff(0) == 0);
        CHECK(hs.coeff(1) == 0);
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    CHECK(total == t2_q_polynomial(n));
  }
}

TEST_CASE("q: pruned low coefficients equal full prefixes, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const QPolynomial p = p_polynomial(n, 2);
    for (int kmax : {1, 3, 6}) {
      const auto low = low_coefficients(n, kmax, std::nullopt, 2);
      REQUIRE(low.coeffs.size() == static_cast<std::size_t>(kmax));
      for (int k = 0; k < kmax; ++k) CHECK(low.coeffs[static_cast<std::size_t>(k)] == p.coeff(k));
    }
    if (n >= 3) CHECK(p.coeff(1) == 5 * (n - 2));
  }
}

TEST_CASE("q: fitting recovers random integer-valued polynomials and rejects off-curve samples") {
  SamplerRng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + static_cast<int>(rng.uniform_index(5));
    std::vector<long long> num(static_cast<std::size_t>(k) + 1);
    for (auto& c : num) c = static_cast<long long>(rng.uniform_index(2001)) - 1000;
    const long long den = 1 + static_cast<long long>(rng.uniform_index(6));
    const auto truth = RationalPolynomialInN::from_integers(num, den);
    std::vector<std::pair<int, BigInt>> samples;
    for (int n = 3; n <= 3 + k + 1; ++n) {
      // scale so every sample is an integer
      samples.emplace_back(n, numerator(truth.evaluate(Rational(n)) * den));
    }
    CHECK(fit_coefficient_polynomial(k, samples, 3) == truth * Rational(den));
    samples.back().second += 1;
    CHECK_THROWS_AS(fit_coefficient_polynomial(k, samples, 3), InconsistentSamples);
  }
}

TEST_CASE("q: Bareiss Hankel determinants equal naive Leibniz expansion") {
  const auto seq = t2_sequence(7);
  for (int offset = 0; offset <= 1; ++offset) {
    for (int k = 1; k <= 4; ++k) {
      std::vector<int> perm(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
      QPolynomial det;
      do {
        std::vector<int> p(perm);
        int inv = 0;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) inv += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
        QPolynomial term{1};
        for (int i = 0; i < k; ++i) term *= seq[static_cast<std::size_t>(i + p[static_cast<std::size_t>(i)] + offset)];
        if (inv % 2) det -= term;
        else det += term;
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(hankel_determinant(seq, k, offset) == det);
    }
  }
}

// ---- sampler

TEST_CASE("sampler: level-2 validity is local; level-1 swap is a valid involution, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : all_depth2_states(n)) {
      for (int p = 1; p <= 2 * n - 1; ++p) {
        auto top = s.top;
        std::swap(top[static_cast<std::size_t>(p - 1)], top[static_cast<std::size_t>(p)]);
        CHECK(level2_swap_is_valid(s, p) == oracle::interlaces(n, 1, s.bottom, top));
      }
      for (int i = 1; i < n; ++i) {
        const auto t = level1_swap(s, i);
        CHECK(oracle::interlaces(n, 1, t.bottom, t.top));
        CHECK(level1_swap(t, i) == s);
      }
    }
  }
}

TEST_CASE("sampler: every accepted state is valid and cached psi is exact") {
  for (int n : {2, 3, 4, 7}) {
    auto s = Depth2State::identity(n);
    SamplerRng rng(static_cast<std::uint64_t>(n));
    for (int t = 0; t < 20000; ++t) {
      const auto outcome = mh_step(s, 0.6, rng);
      if (outcome.kind != StepKind::Accepted) continue;
      const Flat b(s.bottom), tp(s.top);
      CHECK(oracle::interlaces(n, 1, b, tp));
      CHECK(s.psi == oracle::psi(n, 1, b, tp));
    }
  }
}

TEST_CASE("sampler: moves connect the state space") {
  for (int n = 1; n <= 5; ++n) {
    const auto r = connectivity_check(n);
    CHECK(r.connected());
    CHECK(r.total == static_cast<std::size_t>(count_triangles(2, n).total));
  }
}

TEST_CASE("sampler: q^psi is exactly stationary for the transition kernel, n = 3") {
  const int n = 3;
  const Rational q(1, 5);
  const auto states = all_depth2_states(n);
  std::map<std::string, Rational> pi = exact_distribution(n, q);
  std::map<std::string, Rational> next;
  auto qpow = [&](long long e) {
    Rational r = 1;
    for (long long i = 0; i < e; ++i) r *= q;
    return r;
  };
  const Rational move_prob(1, 3 * n - 2);
  for (const auto& s : states) {
    const Rational mass = pi.at(s.key()) * move_prob;
    auto propose = [&](const std::optional<Depth2State>& t) {
      if (!t) {
        next[s.key()] += mass;
        return;
      }
      const long long delta = t->psi - s.psi;
      const Rational a = delta <= 0 ? Rational(1) : qpow(delta);
      next[t->key()] += mass * a;
      next[s.key()] += mass * (1 - a);
    };
    for (int p = 1; p <= 2 * n - 1; ++p) propose(level2_swap(s, p));
    for (int i = 1; i < n; ++i) propose(level1_swap(s, i));
  }
  REQUIRE(next.size() == pi.size());
  for (const auto& [key, p] : pi) CHECK(next.at(key) == p);
}

TEST_CASE("sampler: seeded runs are deterministic") {
  SamplerConfig c;
  c.n = 6;
  c.q = 0.35;
  c.steps = 30000;
  c.thinning = 3;
  c.seed = 77;
  const auto a = run_chain(c), b = run_chain(c);
  CHECK(a.final_state == b.final_state);
  CHECK(a.stats.level2_heatmap == b.stats.level2_heatmap);
  CHECK(a.stats.psi_histogram == b.stats.psi_histogram);
  c.seed = 78;
  CHECK(run_chain(c).stats.level2_heatmap != a.stats.level2_heatmap);
}
