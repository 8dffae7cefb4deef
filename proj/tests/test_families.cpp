// Tests for the extremal family constructions, the closed-form values, and
// the induction arithmetic.
#include <catch2/catch_amalgamated.hpp>

#include <flagkneser/families.hpp>
#include <flagkneser/shifting.hpp>

using namespace flagkneser;

TEST_CASE("build_family_i produces independent families of known sizes") {
  FlagFamily f0 = build_family_i(7, 1, 4, 0);
  CHECK(f0.size() == 60);
  CHECK(is_independent(f0));
  CHECK(is_maximal_independent(f0));

  FlagFamily f1 = build_family_i(7, 1, 4, 1);
  CHECK(f1.size() == 50);
  CHECK(is_maximal_independent(f1));

  CHECK(build_family_i(6, 1, 4, 1).size() == 22);
  CHECK(build_family_i(6, 1, 4, 2).size() == 22);
  CHECK(build_family_i(7, 1, 5, 3).size() == 37);
  CHECK(build_family_i(9, 1, 6, 3).size() == 141);
  CHECK(build_family_i(11, 1, 8, 0).size() == 360);
}

TEST_CASE("the i = n-9 family of type {1,n-3} has size C(n,4)+42") {
  for (int n = 9; n <= 16; ++n) {
    FlagFamily fam = build_family_i(n, 1, n - 3, n - 9);
    CHECK(fam.size() == binomial(n, 4) + 42);
    CHECK(is_independent(fam));
  }
}

TEST_CASE("the i = 0 family at n = 9 is the counterexample floor") {
  FlagFamily fam = build_family_i(9, 1, 6, 0);
  CHECK(fam.size() == 168);
  CHECK(is_left_shifted(fam));
  CHECK(is_maximal_independent(fam));
}

TEST_CASE("build_family_i validates its arguments") {
  CHECK_THROWS_AS(build_family_i(7, 4, 4, 0), std::invalid_argument);   // a == b
  CHECK_THROWS_AS(build_family_i(7, 0, 4, 0), std::invalid_argument);   // a < 1
  CHECK_THROWS_AS(build_family_i(7, 1, 7, 0), std::invalid_argument);   // b > n-1
  CHECK_THROWS_AS(build_family_i(7, 3, 4, 0), std::invalid_argument);   // a + b >= n
  CHECK_THROWS_AS(build_family_i(7, 1, 4, -1), std::invalid_argument);  // i < 0
  CHECK_THROWS_AS(build_family_i(7, 1, 4, 2), std::invalid_argument);   // i > 2b - n
}

TEST_CASE("closed-form conjecture values") {
  CHECK(conjecture_value(5, 2) == 12);
  CHECK(conjecture_value(11, 3) == 372);
  CHECK(conjecture_value(12, 3) == 537);
  CHECK(conjecture_value(19, 4) == 12720);
}

TEST_CASE("known_alpha resolves sources in precedence order") {
  auto k = known_alpha(7, 1, 4);
  REQUIRE(k.has_value());
  CHECK(k->value == 60);
  CHECK(k->source == AlphaSource::cycle_theorem);
  CHECK(to_string(k->source) == "cycle_theorem");

  // The cycle window n < 2b, a+3b <= 2n takes precedence over the table.
  k = known_alpha(8, 1, 5);
  REQUIRE(k.has_value());
  CHECK(k->value == 105);
  CHECK(k->source == AlphaSource::cycle_theorem);

  k = known_alpha(5, 1, 3);
  REQUIRE(k.has_value());
  CHECK(k->value == 12);
  CHECK(k->source == AlphaSource::cycle_theorem);

  k = known_alpha(7, 2, 4);
  REQUIRE(k.has_value());
  CHECK(k->value == 90);
  CHECK(k->source == AlphaSource::cycle_theorem);

  // Type {1, n-2}.
  k = known_alpha(7, 1, 5);
  REQUIRE(k.has_value());
  CHECK(k->value == 37);
  CHECK(k->source == AlphaSource::theorem_1_n_minus_2);

  // Type {1, n-3} small cases, outside the cycle window.
  for (auto [n, expect] : {std::pair{5, 8LL}, {6, 30LL}, {9, 168LL}, {10, 252LL}}) {
    k = known_alpha(n, 1, n - 3);
    REQUIRE(k.has_value());
    CHECK(k->value == expect);
    CHECK(k->source == AlphaSource::small_case_table);
  }

  // Type {1, n-3} for large n.
  k = known_alpha(11, 1, 8);
  REQUIRE(k.has_value());
  CHECK(k->value == 372);
  CHECK(k->source == AlphaSource::theorem_1_n_minus_3);
  k = known_alpha(12, 1, 9);
  REQUIRE(k.has_value());
  CHECK(k->value == 537);
  CHECK(k->source == AlphaSource::theorem_1_n_minus_3);

  // a + b > n reduces to the complementary type.
  k = known_alpha(9, 3, 8);
  REQUIRE(k.has_value());
  CHECK(k->value == 168);
  CHECK(k->source == AlphaSource::isomorphism_reduction);
  k = known_alpha(5, 2, 4);
  REQUIRE(k.has_value());
  CHECK(k->value == 12);
  CHECK(k->source == AlphaSource::isomorphism_reduction);

  // Open cases.
  CHECK_FALSE(known_alpha(10, 2, 5).has_value());
  CHECK_FALSE(known_alpha(8, 3, 5).has_value());  // a + b == n
  CHECK_FALSE(known_alpha(6, 2, 3).has_value());
  CHECK_FALSE(known_alpha(6, 1, 2).has_value());
}

TEST_CASE("induction arithmetic has slack zero from n = 11 on") {
  for (int n = 11; n <= 16; ++n) {
    InductionCheck c = induction_bound_check(n);
    CHECK(c.hypothesis_met);
    CHECK(c.holds);
    CHECK(c.slack == 0);
    CHECK(c.lhs == static_cast<long long>(binomial(n, 4)) + 42);
  }
}

TEST_CASE("induction arithmetic fails strictly below the threshold") {
  // Small cases document why the bound cannot start earlier.
  InductionCheck c9 = induction_bound_check(9);
  CHECK_FALSE(c9.hypothesis_met);
  CHECK_FALSE(c9.holds);
  CHECK(c9.lhs == 168);
  CHECK(c9.rhs == 161);
  CHECK(c9.slack == -7);

  InductionCheck c7 = induction_bound_check(7);
  CHECK(c7.lhs == 60);
  CHECK(c7.rhs == 50);
}

TEST_CASE("induction check accepts explicit overrides") {
  InductionCheck c = induction_bound_check(9, 168LL, 105LL);
  CHECK(c.rhs == 161);
  CHECK_FALSE(c.holds);

  // Pascal's rule keeps the slack at zero for any larger n.
  InductionCheck c20 = induction_bound_check(20);
  CHECK(c20.slack == 0);
  CHECK(c20.holds);

  CHECK_THROWS_AS(induction_bound_check(5), std::invalid_argument);
}
