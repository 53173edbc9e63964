#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ctri/bigint.hpp"

namespace ctri {

/// Polynomial in the palette size n with exact rational coefficients
/// (index i holds the coefficient of n^i, trailing zeros trimmed).
class RationalPolynomialInN {
 public:
  RationalPolynomialInN() = default;
  explicit RationalPolynomialInN(std::vector<Rational> coeffs);
  RationalPolynomialInN(std::initializer_list<long long> coeffs);
  static RationalPolynomialInN constant(const Rational& c);
  /// Integer-coefficient numerator divided by a positive integer.
  static RationalPolynomialInN from_integers(const std::vector<long long>& numerator, long long denominator);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational evaluate(const Rational& n) const;
  /// True iff every coefficient is an integer.
  bool has_integer_coefficients() const;

  RationalPolynomialInN& operator+=(const RationalPolynomialInN& rhs);
  RationalPolynomialInN& operator-=(const RationalPolynomialInN& rhs);
  RationalPolynomialInN& operator*=(const RationalPolynomialInN& rhs);
  RationalPolynomialInN& operator*=(const Rational& s);
  friend RationalPolynomialInN operator+(RationalPolynomialInN a, const RationalPolynomialInN& b) { return a += b; }
  friend RationalPolynomialInN operator-(RationalPolynomialInN a, const RationalPolynomialInN& b) { return a -= b; }
  friend RationalPolynomialInN operator*(RationalPolynomialInN a, const RationalPolynomialInN& b) { return a *= b; }
  friend RationalPolynomialInN operator*(RationalPolynomialInN a, const Rational& s) { return a *= s; }
  friend bool operator==(const RationalPolynomialInN&, const RationalPolynomialInN&) = default;

  /// Human-readable form such as "25/2 n^2 - 49/2 n - 58".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace ctri
