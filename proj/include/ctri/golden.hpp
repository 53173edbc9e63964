#pragma once

#include <span>
#include <string>
#include <vector>

#include "ctri/bigint.hpp"
#include "ctri/core_model.hpp"
#include "ctri/qpolynomial.hpp"
#include "ctri/rational_poly.hpp"

// Published reference values, kept as data and consumed by `verify` and the
// acceptance suite. Nothing in the library computes from these.
namespace ctri::golden {

struct CountCell {
  int depth;
  int colors;
  const char* value;
  bool slow;  // opt-in cells (large search)
};
std::span<const CountCell> triangle_counts();

struct ValuationCell {
  int depth;
  int colors;
  int valuation;
};
std::span<const ValuationCell> two_adic_valuations();

struct DivisorFact {
  int depth;
  int colors;
  long long divisor;
};
std::span<const DivisorFact> prime_divisors();

/// Genocchi medians H_0..H_5.
std::span<const long long> genocchi_medians();

struct CanonicalCount {
  int colors;
  long long count;
};
/// Number of depth-2 triangles with identity bottom row modulo boundary involutions.
std::span<const CanonicalCount> canonical_triangle_counts();

/// Largest n with a fully listed P_n(q).
int p_listing_max();
/// P_n(q) for 1 <= n <= p_listing_max(), expanded from its palindromic half.
QPolynomial p_listing(int n);

/// Range of n with published low-coefficient prefixes a_0(n)..a_5(n).
int p_prefix_min();
int p_prefix_max();
std::vector<BigInt> p_prefix(int n);

enum class Analog { Randrianarivony, HanZeng, ZengZhou };
/// Listed values are for 1 <= n <= 5.
QPolynomial known_analog(Analog which, int n);

struct HSigmaValue {
  std::vector<Color> sigma;
  QPolynomial poly;
};
std::vector<HSigmaValue> h_sigma_values();

struct CoefficientFormula {
  int k;
  int threshold;  // the formula is claimed for n >= threshold
  RationalPolynomialInN poly;
};
/// a_1..a_5 as polynomials in n.
std::vector<CoefficientFormula> coefficient_formulas();

/// kappa_1..kappa_5 (index 0 unused, zero).
std::vector<RationalPolynomialInN> cumulant_formulas();

struct HankelRoot {
  int size;
  int offset;
  double value;
};
std::span<const HankelRoot> hankel_roots();

// Worked examples.
Triangle example_triangle_n3();                    // n = 3, N = 3, bottom (2, 3, 1)
std::string example_triangle_n3_merged_first();     // merged first two levels
std::vector<long long> example_triangle_n3_psi();  // psi of each consecutive pair
Row example_depth2_bottom();                        // n = 4 worked psi computation
Row example_depth2_top();
long long example_depth2_psi();
std::vector<long long> example_depth2_subtotals();
Row example_low_psi_bottom();                       // inv(sigma) = 3 yet psi = 2
Row example_low_psi_top();
long long example_low_psi_value();

}  // namespace ctri::golden
