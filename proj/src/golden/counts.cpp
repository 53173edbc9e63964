#include "ctri/golden.hpp"

namespace ctri::golden {

// T_N(n), the number of colored interlacing n-triangles of depth N.
std::span<const CountCell> triangle_counts() {
  static constexpr CountCell cells[] = {
      {1, 2, "2", false},       {1, 3, "6", false},           {1, 4, "24", false},
      {1, 5, "120", false},     {1, 6, "720", false},
      {2, 2, "4", false},       {2, 3, "48", false},          {2, 4, "1344", false},
      {2, 5, "72960", false},   {2, 6, "6796800", false},
      {3, 2, "8", false},       {3, 3, "528", false},         {3, 4, "191232", false},
      {3, 5, "257794560", true},
      {3, 6, "1012737392640", true},
      {4, 2, "16", false},      {4, 3, "8160", false},        {4, 4, "72099840", false},
      {5, 2, "32", false},      {5, 3, "179520", false},
      {5, 4, "73410306048", true},
      {6, 2, "64", false},      {6, 3, "5666304", false},
  };
  return cells;
}

// 2-adic valuations of T_N(n) / n!.
std::span<const ValuationCell> two_adic_valuations() {
  static constexpr ValuationCell cells[] = {
      {1, 2, 0}, {1, 3, 0}, {1, 4, 0}, {1, 5, 0}, {1, 6, 0},
      {2, 2, 1}, {2, 3, 3}, {2, 4, 3}, {2, 5, 5}, {2, 6, 5},
      {3, 2, 2}, {3, 3, 3}, {3, 4, 5}, {3, 5, 6}, {3, 6, 10},
      {4, 2, 3}, {4, 3, 4}, {4, 4, 8},
      {5, 2, 4}, {5, 3, 5}, {5, 4, 10},
  };
  return cells;
}

// Large prime factors of two of the counts above.
std::span<const DivisorFact> prime_divisors() {
  static constexpr DivisorFact facts[] = {
      {5, 4, 331897},
      {3, 6, 457871},
  };
  return facts;
}

std::span<const long long> genocchi_medians() {
  static constexpr long long h[] = {1, 1, 2, 8, 56, 608};
  return h;
}

// Canonical depth-2 triangles, i.e. H_n / 2^(n-1).
std::span<const CanonicalCount> canonical_triangle_counts() {
  static constexpr CanonicalCount counts[] = {
      {6, 295},
      {7, 3098},
      {8, 42271},
      {9, 726734},
  };
  return counts;
}

}  // namespace ctri::golden
