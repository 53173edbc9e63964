#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ctri/bigint.hpp"
#include "ctri/core_model.hpp"
#include "ctri/qpolynomial.hpp"
#include "ctri/rational_poly.hpp"

namespace ctri {

/// Widest palette accepted by the depth-2 q-enumeration (subset tables of size 2^n).
inline constexpr int kMaxQPolyColors = 12;

/// Level-2 rows over the identity bottom row with top[2i] < top[2i+1]
/// (1-based) for every boundary i: one row per boundary-involution orbit.
std::vector<std::vector<Color>> canonical_top_rows(int n);

/// T_2(n; q), summing q^psi over every depth-2 triangle.
QPolynomial t2_q_polynomial(int n, int threads = 1);

/// T_2(n; q) / 2^(n-1). Throws std::logic_error if a coefficient is not divisible.
QPolynomial p_polynomial(int n, int threads = 1);

/// T_2(0; q) = 1, T_2(1; q), ..., T_2(max_n; q).
std::vector<QPolynomial> t2_sequence(int max_n, int threads = 1);

/// Sum of q^psi over depth-2 triangles whose bottom row reads sigma.
QPolynomial h_sigma_polynomial(std::span<const Color> sigma);

struct LowCoefficients {
  std::vector<BigInt> coeffs;  // a_0(n) .. a_{k_max-1}(n) of P_n(q)
  bool heuristic = false;      // set when an inversion cap restricted the bottom rows
  std::uint64_t nodes = 0;     // search nodes visited
};

/// Low-degree coefficients of P_n(q) by a right-to-left backtracking over
/// bottom and top entries that stops once the partial psi reaches k_max.
/// inv_cap restricts bottom rows to inv(sigma) <= inv_cap, which is not known
/// to be complete; the result is then flagged heuristic.
LowCoefficients low_coefficients(int n, int k_max, std::optional<int> inv_cap = std::nullopt, int threads = 1);

/// a_1(n) == 5(n - 2), for n >= 3.
bool a1_check(int n, int threads = 1);

class InconsistentSamples : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact interpolation of a degree <= k polynomial through (n, a_k(n)) samples
/// with n >= threshold. The first k+1 samples determine the polynomial; any
/// further samples must lie on it, otherwise InconsistentSamples is thrown.
RationalPolynomialInN fit_coefficient_polynomial(int k, std::span<const std::pair<int, BigInt>> samples,
                                                 int threshold = 0);

/// k! * poly has integer coefficients, degree k and leading coefficient 5^k.
bool leading_coefficient_check(const RationalPolynomialInN& poly, int k);

/// Cumulants kappa_1..kappa_K of moments m_0 = 1, m_1, ..., m_K via
/// kappa_k = m_k - sum_{j<k} C(k-1, j-1) kappa_j m_{k-j}. Entry 0 of the
/// result is the zero polynomial.
std::vector<RationalPolynomialInN> moments_to_cumulants(std::span<const RationalPolynomialInN> moments);

/// det[seq[i + j + offset]]_{i,j=0..k-1} by fraction-free elimination over Z[q].
QPolynomial hankel_determinant(std::span<const QPolynomial> seq, int k, int offset);

struct RootEstimate {
  double value = 0.0;  // midpoint of the final bracket
  Rational lo;
  Rational hi;
};

/// Smallest root in (0, 1): scans grid points i/grid for a sign change (the
/// sign just above 0 is read off the lowest nonzero coefficient), then bisects
/// in exact arithmetic until the bracket is narrower than tolerance.
std::optional<RootEstimate> smallest_positive_root(const QPolynomial& poly, double tolerance, int grid = 10000);

struct HankelReport {
  int k = 0;
  int offset = 0;
  QPolynomial determinant;
  std::optional<RootEstimate> smallest_positive_root;
};

/// Hankel determinant of the T_2(n; q) sequence with its smallest positive root.
HankelReport hankel_report(int k, int offset, double tolerance = 1e-6, int threads = 1);

}  // namespace ctri
