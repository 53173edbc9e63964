#include "doctest.h"

#include "ctri/golden.hpp"
#include "ctri/psi.hpp"
#include "oracles.hpp"

using namespace ctri;

TEST_CASE("depth-3 example: psi of each level pair") {
  const Triangle t = golden::example_triangle_n3();
  const auto want = golden::example_triangle_n3_psi();
  CHECK(psi_vertex(t.level(1), t.level(2)) == want[0]);
  CHECK(psi_vertex(t.level(2), t.level(3)) == want[1]);
  CHECK(psi_formula(t.level(2), t.level(3)) == want[1]);
  CHECK(psi_total(t) == want[0] + want[1]);
}

TEST_CASE("n = 4 worked example, including per-position subtotals") {
  const Row bottom = golden::example_depth2_bottom();
  const Row top = golden::example_depth2_top();
  CHECK(psi_vertex(bottom, top) == golden::example_depth2_psi());
  CHECK(psi_formula(bottom, top) == golden::example_depth2_psi());

  // subtotal of bottom position p = sum over c' > c(p) of tops minus bottoms of c' before p
  const auto m = merge_rows(bottom, top);
  std::vector<long long> subtotals;
  std::vector<int> tops(5, 0), bots(5, 0);
  for (const auto& s : m.slots) {
    if (s.origin == SlotOrigin::Top) {
      ++tops[s.color];
      continue;
    }
    long long sub = 0;
    for (int d = s.color + 1; d <= 4; ++d) sub += tops[d] - bots[d];
    subtotals.push_back(sub);
    ++bots[s.color];
  }
  CHECK(subtotals == golden::example_depth2_subtotals());
}

TEST_CASE("psi can be smaller than the inversion number of the bottom row") {
  CHECK(psi_vertex(golden::example_low_psi_bottom(), golden::example_low_psi_top()) ==
        golden::example_low_psi_value());
}

TEST_CASE("non-interlacing rows raise ContractViolation") {
  CHECK_THROWS_AS(psi_vertex(Row(2, 1, {1, 2}), Row(2, 2, {2, 1, 1, 2})), ContractViolation);
  CHECK_THROWS_AS(psi_vertex(Row(2, 1, {1, 2}), Row(3, 2, {1, 1, 2, 2, 3, 3})), std::invalid_argument);
}

TEST_CASE("vertex scan matches the oracle on every interlacing pair, n <= 4 at k = 1") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& b : oracle::all_words(n, 1)) {
      for (const auto& t : oracle::all_words(n, 2)) {
        if (!oracle::interlaces(n, 1, b, t)) continue;
        CHECK(psi_vertex(Row(n, 1, b), Row(n, 2, t)) == oracle::psi(n, 1, b, t));
      }
    }
  }
}

TEST_CASE("wide palettes use the multi-word and dynamic sets") {
  for (int n : {63, 64, 65, 128, 129, 200}) {
    const Triangle t = Triangle::staircase(n, 2);
    CHECK(psi_vertex(t.level(1), t.level(2)) == 0);
    const Triangle c = color_complement(t);
    CHECK(psi_vertex(c.level(1), c.level(2)) == psi_upper_bound(n, 1));
  }
}

TEST_CASE("upper bound formula") {
  CHECK(psi_upper_bound(3, 2) == 6);
  CHECK(psi_upper_bound(1, 5) == 0);
}
