#include "doctest.h"

#include "ctri/enumeration.hpp"
#include "ctri/golden.hpp"

// Internal consistency of the embedded reference tables.

using namespace ctri;

TEST_CASE("count cells are consistent with the valuation grid") {
  for (const auto& v : golden::two_adic_valuations()) {
    bool found = false;
    for (const auto& c : golden::triangle_counts()) {
      if (c.depth != v.depth || c.colors != v.colors) continue;
      found = true;
      const BigInt total(c.value);
      CHECK(total % factorial(c.colors) == 0);
      CHECK(two_adic_valuation(total / factorial(c.colors)) == v.valuation);
    }
    CHECK(found);
  }
}

TEST_CASE("listed polynomials evaluate to n! H_n / 2^(n-1) at q = 1") {
  const auto h = golden::genocchi_medians();
  for (int n = 1; n < static_cast<int>(h.size()); ++n) {
    CHECK((golden::p_listing(n).evaluate(BigInt(1)) << (n - 1)) == factorial(n) * h[static_cast<std::size_t>(n)]);
  }
  for (const auto& c : golden::canonical_triangle_counts()) {
    CHECK(golden::p_listing(c.colors).evaluate(BigInt(1)) % c.count == 0);
  }
}

TEST_CASE("prefixes continue the linear law and agree with the listing of P_9") {
  for (int n = golden::p_prefix_min(); n <= golden::p_prefix_max(); ++n) {
    const auto p = golden::p_prefix(n);
    CHECK(p[0] == 1);
    CHECK(p[1] == 5 * (n - 2));
  }
  CHECK(golden::p_listing(9).coeff(1) == 35);
}

TEST_CASE("formulas reproduce the listed prefixes above their thresholds") {
  for (const auto& f : golden::coefficient_formulas()) {
    for (int n = std::max(f.threshold, golden::p_prefix_min()); n <= golden::p_prefix_max(); ++n) {
      CAPTURE(f.k);
      CAPTURE(n);
      CHECK(f.poly.evaluate(Rational(n)) == Rational(golden::p_prefix(n)[static_cast<std::size_t>(f.k)]));
    }
    for (int n = f.threshold; n <= golden::p_listing_max(); ++n) {
      CHECK(f.poly.evaluate(Rational(n)) == Rational(golden::p_listing(n).coeff(f.k)));
    }
  }
}

TEST_CASE("listing bounds") {
  CHECK_THROWS_AS(golden::p_listing(0), std::out_of_range);
  CHECK_THROWS_AS(golden::p_listing(golden::p_listing_max() + 1), std::out_of_range);
  CHECK_THROWS_AS(golden::p_prefix(9), std::out_of_range);
  CHECK_THROWS_AS(golden::known_analog(golden::Analog::HanZeng, 6), std::out_of_range);
}
