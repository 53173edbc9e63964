#include "ctri/golden.hpp"

#include <stdexcept>

namespace ctri::golden {

namespace {

// Palindromic polynomials of degree n(n-1)/2 are listed up to the middle.
const std::vector<std::vector<long long>>& half_listings() {
  static const std::vector<std::vector<long long>> rows = {
      {1},
      {1, 1},
      {1, 5, 5, 1},
      {1, 10, 47, 52},
      {1, 15, 132, 527, 1019, 1172},
      {1, 20, 245, 1825, 7295, 19534, 34465, 42815},
      {1, 25, 383, 3977, 26645, 115165, 365346, 878276, 1563964, 2226948, 2626230},
      {1, 30, 546, 7018, 64622, 411692, 1914780, 6889907, 19865655, 46208719, 88274748, 141139717,
       193232778, 231337829, 245670636},
      {1, 35, 734, 11064, 125319, 1059757, 6649287, 32573212, 129428316, 424672873, 1174423848,
       2770263242, 5640036376, 9998171117, 15583534941, 21645762974, 27163602028, 31055190622,
       32466222428},
  };
  return rows;
}

}  // namespace

int p_listing_max() { return static_cast<int>(half_listings().size()); }

QPolynomial p_listing(int n) {
  if (n < 1 || n > p_listing_max()) throw std::out_of_range("no listing for this n");
  const auto& half = half_listings()[static_cast<std::size_t>(n - 1)];
  const std::size_t degree = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::vector<BigInt> coeffs(degree + 1);
  for (std::size_t j = 0; j <= degree; ++j) {
    const std::size_t mirrored = std::min(j, degree - j);
    if (mirrored >= half.size()) throw std::logic_error("listing shorter than half the degree");
    coeffs[j] = half[mirrored];
  }
  return QPolynomial(std::move(coeffs));
}

int p_prefix_min() { return 10; }
int p_prefix_max() { return 15; }

std::vector<BigInt> p_prefix(int n) {
  static const std::vector<std::vector<long long>> rows = {
      {1, 40, 947, 16240, 214297, 2207081},
      {1, 45, 1185, 22671, 338129, 4033256},
      {1, 50, 1448, 30482, 504040, 6762968},
      {1, 55, 1736, 39798, 719880, 10663371},
      {1, 60, 2049, 50744, 994124, 16045700},
      {1, 65, 2387, 63445, 1335872, 23268315},
  };
  if (n < p_prefix_min() || n > p_prefix_max()) throw std::out_of_range("no prefix for this n");
  const auto& r = rows[static_cast<std::size_t>(n - p_prefix_min())];
  return std::vector<BigInt>(r.begin(), r.end());
}

QPolynomial known_analog(Analog which, int n) {
  if (n < 1 || n > 5) throw std::out_of_range("analogs are listed for 1 <= n <= 5");
  const QPolynomial one_plus_q{1, 1};
  const QPolynomial cyclotomic6{1, -1, 1};  // 1 - q + q^2
  const QPolynomial one_plus_q2{1, 0, 1};
  switch (which) {
    case Analog::Randrianarivony:
      switch (n) {
        case 1: return QPolynomial::monomial(1);
        case 2: return product_of_powers({{QPolynomial::monomial(2), 1}, {one_plus_q, 1}});
        case 3: return product_of_powers({{QPolynomial::monomial(3), 1}, {one_plus_q, 3}, {cyclotomic6, 1}});
        case 4:
          return product_of_powers(
              {{QPolynomial::monomial(4), 1}, {one_plus_q, 3}, {QPolynomial{1, 0, 0, 2, 0, 1, 2, 1}, 1}});
        default:
          return product_of_powers({{QPolynomial::monomial(5), 1},
                                    {one_plus_q, 5},
                                    {cyclotomic6, 2},
                                    {QPolynomial{1, 1, 0, 1, 1, 2, 4, 5, 3, 1}, 1}});
      }
    case Analog::HanZeng:
      switch (n) {
        case 1: return QPolynomial{1};
        case 2: return one_plus_q;
        case 3: return one_plus_q.pow(3);
        case 4: return product_of_powers({{one_plus_q, 3}, {QPolynomial{1, 3, 2, 1}, 1}});
        default: return product_of_powers({{one_plus_q, 5}, {QPolynomial{1, 5, 5, 5, 2, 1}, 1}});
      }
    case Analog::ZengZhou:
      switch (n) {
        case 1: return QPolynomial{1};
        case 2: return one_plus_q;
        case 3: return product_of_powers({{one_plus_q, 2}, {one_plus_q2, 1}});
        case 4: return product_of_powers({{one_plus_q, 2}, {one_plus_q2, 1}, {QPolynomial{1, 1, 1, 2, 1, 1}, 1}});
        default:
          return product_of_powers({{one_plus_q, 3},
                                    {one_plus_q2, 2},
                                    {cyclotomic6, 1},
                                    {QPolynomial{1, 2, 2, 3, 4, 4, 2, 1}, 1}});
      }
  }
  throw std::invalid_argument("unknown analog");
}

std::vector<HSigmaValue> h_sigma_values() {
  auto id = [](int n) {
    std::vector<Color> s;
    for (int i = 1; i <= n; ++i) s.push_back(static_cast<Color>(i));
    return s;
  };
  return {
      {id(1), QPolynomial{1}},
      {id(2), QPolynomial{2}},
      {id(3), QPolynomial{4, 4}},
      {id(4), QPolynomial{8, 16, 32}},
      {id(5), QPolynomial{16, 48, 144, 256, 144}},
      // a permutation and its inverse
      {{1, 3, 4, 2}, QPolynomial{0, 0, 32, 24}},
      {{1, 4, 2, 3}, QPolynomial{0, 0, 40, 16}},
  };
}

std::vector<CoefficientFormula> coefficient_formulas() {
  using P = RationalPolynomialInN;
  return {
      {1, 3, P::from_integers({-10, 5}, 1)},
      {2, 5, P::from_integers({-116, -49, 25}, 2)},
      {3, 7, P::from_integers({1980, -3104, 15, 125}, 6)},
      {4, 9, P::from_integers({244728, -31390, -36877, 2650, 625}, 24)},
      {5, 11, P::from_integers({5588400, 7120060, -1585240, -290925, 32500, 3125}, 120)},
  };
}

std::vector<RationalPolynomialInN> cumulant_formulas() {
  return {
      RationalPolynomialInN{},
      RationalPolynomialInN{-10, 5},
      RationalPolynomialInN{-216, 51},
      RationalPolynomialInN{-3500, 166},
      RationalPolynomialInN{84360, -28854},
      RationalPolynomialInN{10684800, -1258080},
  };
}

std::span<const HankelRoot> hankel_roots() {
  static constexpr HankelRoot roots[] = {
      {5, 0, 0.08462},
      {3, 1, 0.04641},
  };
  return roots;
}

}  // namespace ctri::golden
