#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ctri/bigint.hpp"

namespace ctri {

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Index i holds the coefficient of q^i. Trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient vector.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  QPolynomial(std::initializer_list<long long> coeffs);

  static QPolynomial constant(const BigInt& c);
  static QPolynomial monomial(int power, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of q^i, zero outside the stored range.
  BigInt coeff(int i) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt evaluate(const BigInt& q) const;
  double evaluate(double q) const;
  /// Sign of p(num/den) for den > 0, evaluated exactly.
  int sign_at(const BigInt& num, const BigInt& den) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  QPolynomial& operator*=(const BigInt& scalar);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend QPolynomial operator*(QPolynomial a, const BigInt& s) { return a *= s; }
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

  QPolynomial pow(int e) const;

  /// Exact division by a scalar; std::nullopt when some coefficient is not divisible.
  std::optional<QPolynomial> divide_exact(const BigInt& divisor) const;
  /// Exact division in Z[q]; std::nullopt when the remainder is nonzero.
  std::optional<QPolynomial> divide_exact(const QPolynomial& divisor) const;

  /// Coefficients low-to-high separated by single spaces ("0" for the zero polynomial).
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// coeff[j] == coeff[d - j] for all j in [0, d]; false if deg > d.
bool palindrome_check(const QPolynomial& poly, int d);

/// a_k^2 >= a_{k-1} a_{k+1} for every interior index of the coefficient range.
bool log_concavity_check(const QPolynomial& poly);

/// Product of factor^exponent, used to expand factored reference forms.
QPolynomial product_of_powers(
    const std::vector<std::pair<QPolynomial, int>>& factors);

}  // namespace ctri
