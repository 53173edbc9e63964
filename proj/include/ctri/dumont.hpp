#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ctri/bigint.hpp"
#include "ctri/core_model.hpp"
#include "ctri/qpolynomial.hpp"

namespace ctri {

/// A permutation sigma of {1..2n} in one-line notation with sigma(i) > i at odd
/// i and sigma(i) < i at even i.
class DumontPermutation {
 public:
  /// Throws std::invalid_argument if the Dumont inequalities fail.
  explicit DumontPermutation(std::vector<int> one_line);

  int half_size() const { return static_cast<int>(sigma_.size() / 2); }
  std::span<const int> one_line() const { return sigma_; }
  int operator()(int i) const { return sigma_[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const DumontPermutation&, const DumontPermutation&) = default;

 private:
  std::vector<int> sigma_;
};

/// Throws std::invalid_argument when sigma is not a permutation of {1..m} or m is odd.
bool is_dumont(std::span<const int> sigma);

long long inversion_count(std::span<const int> perm);

/// Calls visit(sigma) for every Dumont derangement of {1..2n} in lexicographic
/// order. When first_value is set, only derangements with sigma(1) == first_value
/// are produced, which partitions the enumeration for parallel counting.
void for_each_dumont(int n, const std::function<void(std::span<const int>)>& visit,
                     int first_value = 0);

/// Genocchi median H_n, counted by backtracking.
BigInt count_dumont(int n, int threads = 1);

/// Top row (level 2, over the identity bottom) -> Dumont derangement: for color
/// c with top positions p1 < p2, sigma(2c) = p1 and sigma(2c - 1) = p2.
DumontPermutation top_row_to_dumont(const Row& top);
Row dumont_to_top_row(const DumontPermutation& sigma);

/// Sum over Dumont derangements of q^inv(sigma).
QPolynomial q_analog_randrianarivony(int n);
/// Evaluates C_n(1, q) for the q-Gandhi recurrence C_n = (1 + qx) D_q(x C_{n-1}).
QPolynomial q_analog_han_zeng(int n);
/// g_{2n,1}(q) from the q-Seidel triangle.
QPolynomial q_analog_zeng_zhou(int n);

}  // namespace ctri
