#include "doctest.h"

#include "ctri/core_model.hpp"
#include "ctri/golden.hpp"
#include "ctri/triangle_io.hpp"
#include "oracles.hpp"

using namespace ctri;

TEST_CASE("rows reject colors outside the palette and wrong lengths") {
  CHECK_THROWS_AS(Row(3, 1, {1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Row(3, 1, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Row(3, 1, {0, 1, 2}), std::invalid_argument);
  CHECK(Row(3, 2, {1, 1, 2, 2, 3, 3}).has_valid_multiplicities());
  CHECK_FALSE(Row(3, 2, {1, 1, 1, 2, 3, 3}).has_valid_multiplicities());
}

TEST_CASE("triangle-wise indexing") {
  const Row r(3, 2, {2, 1, 3, 3, 2, 1});
  CHECK(r.at(1, 1) == 2);
  CHECK(r.at(2, 2) == 3);
  CHECK(r.at(3, 2) == 1);
  CHECK_THROWS_AS(r.at(4, 1), std::out_of_range);
}

TEST_CASE("staircase triangles are valid") {
  for (int n = 1; n <= 6; ++n) {
    for (int depth = 1; depth <= 4; ++depth) CHECK(validate_triangle(Triangle::staircase(n, depth)));
  }
}

TEST_CASE("merged rendering of the n = 3 example") {
  const Triangle t = golden::example_triangle_n3();
  CHECK(validate_triangle(t));
  CHECK(merge_rows(t.level(1), t.level(2)).to_string() == golden::example_triangle_n3_merged_first());
}

TEST_CASE("is_interlacing agrees with the definition on all level-1/level-2 pairs, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto bottoms = oracle::all_words(n, 1);
    const auto tops = oracle::all_words(n, 2);
    for (const auto& b : bottoms) {
      for (const auto& t : tops) {
        CHECK(is_interlacing(Row(n, 1, b), Row(n, 2, t)) == oracle::interlaces(n, 1, b, t));
      }
    }
  }
}

TEST_CASE("diagnose_triangle names the broken invariant") {
  const Triangle bad_mult({Row(2, 1, {1, 2}), Row(2, 2, {1, 1, 1, 2})});
  auto issue = diagnose_triangle(bad_mult);
  REQUIRE(issue);
  CHECK(issue->kind == ValidationIssue::Kind::Multiplicity);
  CHECK(issue->level == 2);

  // both rows are fine on their own but 2 sits on the left of the bottom 1
  const Triangle bad_inter({Row(2, 1, {1, 2}), Row(2, 2, {2, 1, 1, 2})});
  issue = diagnose_triangle(bad_inter);
  REQUIRE(issue);
  CHECK(issue->kind == ValidationIssue::Kind::Interlacing);
  CHECK(issue->level == 1);
}

TEST_CASE("color permutations") {
  const ColorPermutation p{2, 3, 1};
  CHECK(compose(p, inverse_permutation(p)) == identity_permutation(3));
  CHECK_THROWS_AS(require_color_permutation(std::vector<Color>{1, 1, 2}, 3), std::invalid_argument);
  const Triangle t = golden::example_triangle_n3();
  const Triangle u = apply_color_permutation(t, p);
  CHECK(validate_triangle(u));
  CHECK(apply_color_permutation(u, inverse_permutation(p)) == t);
  CHECK(color_complement(color_complement(t)) == t);
}

TEST_CASE("canonicalize_bottom yields the identity bottom row") {
  const auto c = canonicalize_bottom(golden::example_triangle_n3());
  CHECK(c.triangle.level(1) == Row::staircase(3, 1));
  CHECK(apply_color_permutation(golden::example_triangle_n3(), c.permutation) == c.triangle);
}

TEST_CASE("boundary involution swaps one pair and is its own inverse") {
  const Triangle t = golden::example_triangle_n3();
  for (int i = 1; i <= 2; ++i) {
    const Triangle u = boundary_involution(t, i);
    CHECK(validate_triangle(u));
    CHECK(u != t);
    CHECK(boundary_involution(u, i) == t);
  }
  CHECK_THROWS(boundary_involution(t, 3));
  CHECK_THROWS(boundary_involution(Triangle::staircase(3, 1), 1));
}

TEST_CASE("text and JSON round trips") {
  const Triangle t = golden::example_triangle_n3();
  CHECK(triangle_from_text(to_text(t)) == t);
  CHECK(triangle_from_json(to_json(t)) == t);
  CHECK(parse_triangle(to_text(t)) == t);
  CHECK(parse_triangle(to_json(t).dump()) == t);
  CHECK_THROWS(parse_triangle("3 2\n1 2\n"));
}
