#include "ctri/rational_poly.hpp"

#include <stdexcept>

namespace ctri {

RationalPolynomialInN::RationalPolynomialInN(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomialInN::RationalPolynomialInN(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RationalPolynomialInN RationalPolynomialInN::constant(const Rational& c) {
  return RationalPolynomialInN(std::vector<Rational>{c});
}

RationalPolynomialInN RationalPolynomialInN::from_integers(const std::vector<long long>& numerator,
                                                           long long denominator) {
  if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
  std::vector<Rational> c;
  c.reserve(numerator.size());
  for (long long v : numerator) c.emplace_back(Rational(v, denominator));
  return RationalPolynomialInN(std::move(c));
}

Rational RationalPolynomialInN::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPolynomialInN::evaluate(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

bool RationalPolynomialInN::has_integer_coefficients() const {
  for (const auto& c : coeffs_) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

RationalPolynomialInN& RationalPolynomialInN::operator+=(const RationalPolynomialInN& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomialInN& RationalPolynomialInN::operator-=(const RationalPolynomialInN& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomialInN& RationalPolynomialInN::operator*=(const RationalPolynomialInN& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomialInN& RationalPolynomialInN::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

std::string RationalPolynomialInN::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1;
    if (!unit || i == 0) out += c.str();
    if (i > 0) {
      if (!unit) out += " ";
      out += "n";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

void RationalPolynomialInN::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace ctri
