#include "ctri/qpolynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ctri {

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not a decimal integer: " + text);
    }
  }
  return BigInt(text);
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial(std::vector<BigInt>{c}); }

QPolynomial QPolynomial::monomial(int power, const BigInt& c) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<BigInt> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return QPolynomial(std::move(v));
}

BigInt QPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt QPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

double QPolynomial::evaluate(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + it->convert_to<double>();
  }
  return acc;
}

int QPolynomial::sign_at(const BigInt& num, const BigInt& den) const {
  if (den.sign() <= 0) throw std::invalid_argument("sign_at requires a positive denominator");
  // den^d * p(num/den) = sum_j c_j num^j den^(d-j), by homogeneous Horner.
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return acc.sign();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

QPolynomial QPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  QPolynomial result = constant(1);
  QPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<QPolynomial> QPolynomial::divide_exact(const BigInt& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero");
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    BigInt q, r;
    boost::multiprecision::divide_qr(coeffs_[i], divisor, q, r);
    if (!r.is_zero()) return std::nullopt;
    out[i] = std::move(q);
  }
  return QPolynomial(std::move(out));
}

std::optional<QPolynomial> QPolynomial::divide_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return QPolynomial{};
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<BigInt> rem = coeffs_;
  const int dd = divisor.degree();
  const BigInt& lead = divisor.coeffs_.back();
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int i = degree() - dd; i >= 0; --i) {
    BigInt& top = rem[static_cast<std::size_t>(i + dd)];
    if (top.is_zero()) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (!r.is_zero()) return std::nullopt;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(i)] = std::move(q);
  }
  for (const auto& c : rem) {
    if (!c.is_zero()) return std::nullopt;
  }
  return QPolynomial(std::move(quot));
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ' ';
    os << coeffs_[i];
  }
  return os.str();
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool palindrome_check(const QPolynomial& poly, int d) {
  if (poly.degree() > d) return false;
  for (int j = 0; j <= d; ++j) {
    if (poly.coeff(j) != poly.coeff(d - j)) return false;
  }
  return true;
}

bool log_concavity_check(const QPolynomial& poly) {
  const auto& c = poly.coeffs();
  std::size_t lo = 0;
  while (lo < c.size() && c[lo].is_zero()) ++lo;
  for (std::size_t k = lo + 1; k + 1 < c.size(); ++k) {
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) return false;
  }
  return true;
}

QPolynomial product_of_powers(const std::vector<std::pair<QPolynomial, int>>& factors) {
  QPolynomial r = QPolynomial::constant(1);
  for (const auto& [f, e] : factors) r *= f.pow(e);
  return r;
}

}  // namespace ctri
