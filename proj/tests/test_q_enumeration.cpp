#include "doctest.h"

#include "ctri/dumont.hpp"
#include "ctri/golden.hpp"
#include "ctri/q_enumeration.hpp"
#include "oracles.hpp"

using namespace ctri;

namespace {

// Determinant by cofactor expansion along the first row.
QPolynomial cofactor_det(const std::vector<std::vector<QPolynomial>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  QPolynomial det;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<QPolynomial>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<QPolynomial> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(row);
    }
    const QPolynomial term = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

}  // namespace

TEST_CASE("T_2(n; q) against brute force, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(t2_q_polynomial(n) == oracle::t2_poly(n));
    CHECK(t2_q_polynomial(n, 3) == oracle::t2_poly(n));
  }
}

TEST_CASE("P_n(q) listings, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const QPolynomial p = p_polynomial(n);
    CHECK(p == golden::p_listing(n));
    CHECK(p.degree() == n * (n - 1) / 2);
    CHECK(palindrome_check(p, n * (n - 1) / 2));
    CHECK(log_concavity_check(p));
  }
  CHECK(t2_q_polynomial(3).to_string() == "4 20 20 4");
}

TEST_CASE("t2_sequence starts with 1 and matches single evaluations") {
  const auto seq = t2_sequence(5);
  REQUIRE(seq.size() == 6);
  CHECK(seq[0] == QPolynomial{1});
  for (int n = 1; n <= 5; ++n) CHECK(seq[static_cast<std::size_t>(n)] == t2_q_polynomial(n));
}

TEST_CASE("canonical top rows count H_n / 2^(n-1)") {
  for (int n = 1; n <= 7; ++n) {
    CHECK((BigInt(canonical_top_rows(n).size()) << (n - 1)) == count_dumont(n));
  }
  for (const auto& c : golden::canonical_triangle_counts()) {
    if (c.colors > 8) continue;
    CHECK(static_cast<long long>(canonical_top_rows(c.colors).size()) == c.count);
  }
}

TEST_CASE("bottom-row refinements") {
  for (const auto& h : golden::h_sigma_values()) {
    CHECK(h_sigma_polynomial(h.sigma) == h.poly);
  }
  // against the brute-force oracle for a few non-identity rows
  for (const std::vector<Color>& s : {std::vector<Color>{2, 1, 3}, std::vector<Color>{3, 1, 4, 2}}) {
    const oracle::Flat b(s.begin(), s.end());
    CHECK(h_sigma_polynomial(s) == oracle::t2_poly(static_cast<int>(s.size()), &b));
  }
}

TEST_CASE("low coefficients match full polynomials, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const QPolynomial p = p_polynomial(n);
    const auto low = low_coefficients(n, 6);
    CHECK_FALSE(low.heuristic);
    for (int k = 0; k < 6; ++k) CHECK(low.coeffs[static_cast<std::size_t>(k)] == p.coeff(k));
  }
}

TEST_CASE("published prefixes for n = 10, 11") {
  for (int n = 10; n <= 11; ++n) {
    const auto want = golden::p_prefix(n);
    CHECK(low_coefficients(n, static_cast<int>(want.size())).coeffs == want);
  }
}

TEST_CASE("inversion cap marks the result heuristic") {
  const auto capped = low_coefficients(6, 4, 3);
  CHECK(capped.heuristic);
  const auto exact = low_coefficients(6, 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(capped.coeffs[k] <= exact.coeffs[k]);
  CHECK_THROWS_AS(low_coefficients(32, 2), std::invalid_argument);
  CHECK_THROWS_AS(low_coefficients(5, 0), std::invalid_argument);
}

TEST_CASE("linear coefficient law") {
  for (int n = 3; n <= 10; ++n) CHECK(a1_check(n));
  CHECK_THROWS(a1_check(2));
}

TEST_CASE("polynomial fitting") {
  const auto truth = RationalPolynomialInN::from_integers({-116, -49, 25}, 2);
  std::vector<std::pair<int, BigInt>> samples;
  for (int n = 5; n <= 9; ++n) samples.emplace_back(n, numerator(truth.evaluate(Rational(n))));
  CHECK(fit_coefficient_polynomial(2, samples, 5) == truth);
  samples.back().second += 1;
  CHECK_THROWS_AS(fit_coefficient_polynomial(2, samples, 5), InconsistentSamples);
  CHECK_THROWS_AS(fit_coefficient_polynomial(2, samples, 6), std::invalid_argument);
  samples.resize(2);
  CHECK_THROWS_AS(fit_coefficient_polynomial(2, samples, 5), std::invalid_argument);
  std::vector<std::pair<int, BigInt>> dup{{5, 1}, {5, 1}, {6, 2}};
  CHECK_THROWS_AS(fit_coefficient_polynomial(1, dup), std::invalid_argument);
}

TEST_CASE("fitting computed coefficients recovers the stated formulas up to a_3") {
  // a_2 from n = 5..8 (one extra point), a_3 from n = 7..10 exactly determined plus n = 11
  std::vector<std::pair<int, BigInt>> a2, a3;
  for (int n = 5; n <= 11; ++n) {
    const auto c = low_coefficients(n, 4).coeffs;
    a2.emplace_back(n, c[2]);
    if (n >= 7) a3.emplace_back(n, c[3]);
  }
  const auto formulas = golden::coefficient_formulas();
  CHECK(fit_coefficient_polynomial(2, a2, 5) == formulas[1].poly);
  CHECK(fit_coefficient_polynomial(3, a3, 7) == formulas[2].poly);
}

TEST_CASE("leading coefficient check") {
  for (const auto& f : golden::coefficient_formulas()) CHECK(leading_coefficient_check(f.poly, f.k));
  CHECK_FALSE(leading_coefficient_check(RationalPolynomialInN{1, 4}, 1));
  CHECK_FALSE(leading_coefficient_check(RationalPolynomialInN::from_integers({1, 0, 25}, 4), 2));
}

TEST_CASE("moment-cumulant transform") {
  // point mass at 1: m_k = 1, so kappa_1 = 1 and higher cumulants vanish
  std::vector<RationalPolynomialInN> point(6, RationalPolynomialInN::constant(1));
  const auto kp = moments_to_cumulants(point);
  CHECK(kp[1] == RationalPolynomialInN::constant(1));
  for (std::size_t k = 2; k < kp.size(); ++k) CHECK(kp[k].is_zero());

  // Poisson with mean n: moments are Touchard polynomials, every cumulant equals n
  std::vector<RationalPolynomialInN> touchard{RationalPolynomialInN::constant(1), RationalPolynomialInN{0, 1},
                                              RationalPolynomialInN{0, 1, 1}, RationalPolynomialInN{0, 1, 3, 1},
                                              RationalPolynomialInN{0, 1, 7, 6, 1}};
  const auto kt = moments_to_cumulants(touchard);
  for (std::size_t k = 1; k < kt.size(); ++k) CHECK(kt[k] == RationalPolynomialInN{0, 1});

  std::vector<RationalPolynomialInN> moments{RationalPolynomialInN::constant(1)};
  for (const auto& f : golden::coefficient_formulas()) moments.push_back(f.poly * Rational(factorial(f.k)));
  const auto kappa = moments_to_cumulants(moments);
  const auto want = golden::cumulant_formulas();
  for (std::size_t k = 1; k < want.size(); ++k) CHECK(kappa[k] == want[k]);

  CHECK_THROWS_AS(moments_to_cumulants(std::vector<RationalPolynomialInN>{RationalPolynomialInN{2}}),
                  std::invalid_argument);
}

TEST_CASE("Bareiss determinant equals cofactor expansion") {
  const auto seq = t2_sequence(8);
  for (int offset = 0; offset <= 1; ++offset) {
    for (int k = 1; k <= 4; ++k) {
      std::vector<std::vector<QPolynomial>> m(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i)].push_back(seq[static_cast<std::size_t>(i + j + offset)]);
      }
      CHECK(hankel_determinant(seq, k, offset) == cofactor_det(m));
    }
  }
  CHECK_THROWS_AS(hankel_determinant(seq, 5, 1), std::invalid_argument);
}

TEST_CASE("root finder") {
  // (4q - 1)(2q - 1) = 8q^2 - 6q + 1
  const auto r = smallest_positive_root(QPolynomial{1, -6, 8}, 1e-9);
  REQUIRE(r);
  CHECK(r->value == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(r->lo <= Rational(1, 4));
  CHECK(r->hi >= Rational(1, 4));
  // root of odd multiplicity right at a grid point
  const auto g = smallest_positive_root(QPolynomial{-1, 10000}, 1e-9);
  REQUIRE(g);
  CHECK(g->value == doctest::Approx(1e-4).epsilon(1e-6));
  CHECK_FALSE(smallest_positive_root(QPolynomial{1, 0, 1}, 1e-6));
  CHECK_THROWS_AS(smallest_positive_root(QPolynomial{}, 1e-6), std::invalid_argument);
}

TEST_CASE("Hankel roots") {
  for (const auto& root : golden::hankel_roots()) {
    const auto r = hankel_report(root.size, root.offset);
    REQUIRE(r.smallest_positive_root);
    const double c = r.smallest_positive_root->value;
    CHECK(std::abs(c - root.value) <= 1e-4);
    CHECK(r.determinant.evaluate(c / 2) < 0);
    CHECK(r.determinant.evaluate(BigInt(1)) >= 0);
  }
}
