// Tests for the exact solver: the brute-force oracle, the three search
// modes, witnesses, incumbents, budgets, and the small-case table check.
#include <catch2/catch_amalgamated.hpp>

#include <flagkneser/solver.hpp>

using namespace flagkneser;

namespace {
SolverConfig with_mode(SymmetryMode m) {
  SolverConfig cfg;
  cfg.symmetry_mode = m;
  return cfg;
}
}  // namespace

TEST_CASE("alpha_bruteforce matches hand-checked values") {
  CHECK(alpha_bruteforce(GraphSpec(5, FlagType({1, 2}))) == 8);
  CHECK(alpha_bruteforce(GraphSpec(5, FlagType({2}))) == 4);   // Petersen
  CHECK(alpha_bruteforce(GraphSpec(6, FlagType({2}))) == 5);
  CHECK(alpha_bruteforce(GraphSpec(5, FlagType({1, 3}))) == 12);
  CHECK(alpha_bruteforce(GraphSpec(4, FlagType({1, 2}))) == 6);
  CHECK(alpha_bruteforce(GraphSpec(3, FlagType({1, 2}))) == 3);
}

TEST_CASE("alpha_bruteforce refuses graphs above 40 vertices") {
  CHECK_THROWS_AS(alpha_bruteforce(GraphSpec(6, FlagType({1, 3}))), std::invalid_argument);
}

TEST_CASE("all three search modes agree with each other and the oracle") {
  const GraphSpec specs[] = {
      GraphSpec(4, FlagType({1, 2})),
      GraphSpec(5, FlagType({1, 2})),
      GraphSpec(5, FlagType({2})),
      GraphSpec(6, FlagType({1, 4})),
      GraphSpec(7, FlagType({1, 4})),
  };
  const long long expected[] = {6, 8, 4, 22, 60};
  for (std::size_t k = 0; k < std::size(specs); ++k) {
    OppositionGraph g(specs[k]);
    for (SymmetryMode m : {SymmetryMode::shifted_closure, SymmetryMode::orbit_branching, SymmetryMode::none}) {
      SolverResult r = alpha_exact(g, with_mode(m));
      CHECK(r.alpha == expected[k]);
      CHECK(r.status == SolveStatus::optimal);
      CHECK(static_cast<long long>(r.witness.size()) == r.alpha);
      CHECK(is_independent(r.witness));
    }
  }
}

TEST_CASE("type {1,n-3} small cases match the proven table") {
  const long long expected[] = {8, 30, 60, 105};
  for (int n = 5; n <= 8; ++n) {
    SolverResult r = alpha_exact(GraphSpec(n, FlagType({1, n - 3})));
    CHECK(r.alpha == expected[n - 5]);
    CHECK(r.status == SolveStatus::optimal);
  }
}

TEST_CASE("the restricted search visits few nodes and records prunes") {
  SolverResult r = alpha_exact(GraphSpec(7, FlagType({1, 4})));
  CHECK(r.stats.nodes > 0);
  CHECK(r.stats.nodes < 10000);
  CHECK(r.stats.symmetry_prunes > 0);
  CHECK(r.stats.wall_seconds >= 0.0);
}

TEST_CASE("a valid initial incumbent is honored") {
  SolverConfig cfg;
  cfg.initial_incumbent = build_family_i(7, 1, 4, 0);
  SolverResult r = alpha_exact(GraphSpec(7, FlagType({1, 4})), cfg);
  CHECK(r.alpha == 60);
  CHECK(r.status == SolveStatus::optimal);
}

TEST_CASE("invalid initial incumbents are rejected") {
  SolverConfig cfg;
  cfg.initial_incumbent = build_family_i(7, 1, 4, 0);
  CHECK_THROWS_AS(alpha_exact(GraphSpec(8, FlagType({1, 5})), cfg), std::invalid_argument);

  SolverConfig dep;
  dep.initial_incumbent = FlagFamily(
      7, FlagType({1, 4}), {Flag::of(7, {{1}, {1, 2, 3, 4}}), Flag::of(7, {{5}, {4, 5, 6, 7}})});
  CHECK_THROWS_AS(alpha_exact(GraphSpec(7, FlagType({1, 4})), dep), std::invalid_argument);
}

TEST_CASE("an exhausted budget returns the incumbent with timeout status") {
  SolverConfig cfg;
  cfg.time_budget_seconds = 1e-4;
  SolverResult r = alpha_exact(GraphSpec(9, FlagType({1, 6})), cfg);
  CHECK(r.status == SolveStatus::timeout);
  // The seeded construction already attains the optimum, so the bound is
  // right even though the proof did not finish.
  CHECK(r.alpha == 168);
  CHECK(r.witness.size() == 168);
  CHECK(is_independent(r.witness));
}

TEST_CASE("multi-threaded search returns the same value") {
  SolverConfig cfg;
  cfg.thread_count = 2;
  SolverResult r = alpha_exact(GraphSpec(7, FlagType({1, 4})), cfg);
  CHECK(r.alpha == 60);
  CHECK(r.status == SolveStatus::optimal);
}

TEST_CASE("solver configuration is validated") {
  SolverConfig bad;
  bad.thread_count = 0;
  CHECK_THROWS_AS(alpha_exact(GraphSpec(5, FlagType({1, 2})), bad), std::invalid_argument);
  bad = SolverConfig{};
  bad.symmetry_depth = -1;
  CHECK_THROWS_AS(alpha_exact(GraphSpec(5, FlagType({1, 2})), bad), std::invalid_argument);
  bad = SolverConfig{};
  bad.time_budget_seconds = -1.0;
  CHECK_THROWS_AS(alpha_exact(GraphSpec(5, FlagType({1, 2})), bad), std::invalid_argument);
}

TEST_CASE("solve status names") {
  CHECK(to_string(SolveStatus::optimal) == "optimal");
  CHECK(to_string(SolveStatus::lower_bound_only) == "lower_bound_only");
  CHECK(to_string(SolveStatus::timeout) == "timeout");
}

TEST_CASE("certify_lower_bound validates a witness family") {
  Certificate ok = certify_lower_bound(GraphSpec(9, FlagType({1, 6})), build_family_i(9, 1, 6, 0));
  CHECK(ok.lemma == "independence-lower-bound");
  CHECK(ok.pass);
  CHECK(ok.note == "alpha >= 168");

  // Parameter mismatch fails without throwing.
  Certificate mismatch = certify_lower_bound(GraphSpec(8, FlagType({1, 5})), build_family_i(9, 1, 6, 0));
  CHECK_FALSE(mismatch.pass);
  REQUIRE_FALSE(mismatch.violations.empty());

  // A dependent family is refuted with a named opposite pair.
  FlagFamily dep(7, FlagType({1, 4}),
                 {Flag::of(7, {{1}, {1, 2, 3, 4}}), Flag::of(7, {{5}, {4, 5, 6, 7}})});
  Certificate bad = certify_lower_bound(GraphSpec(7, FlagType({1, 4})), dep);
  CHECK_FALSE(bad.pass);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations.front().witness.find("opposite") != std::string::npos);
}

TEST_CASE("verify_table2 reports per-row status") {
  Table2Report rep = verify_table2(6);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].n == 5);
  CHECK(rep.rows[0].expected == 8);
  CHECK(rep.rows[0].got == 8);
  CHECK(rep.rows[0].status == "ok");
  CHECK(rep.rows[1].got == 30);
  CHECK(rep.all_ok);
  CHECK_FALSE(rep.any_fail);

  CHECK_THROWS_AS(verify_table2(4), std::invalid_argument);
}

TEST_CASE("a starved table run is inconclusive, not failing") {
  SolverConfig cfg;
  cfg.time_budget_seconds = 1e-4;
  Table2Report rep = verify_table2(9, cfg);
  CHECK_FALSE(rep.any_fail);
  // The n = 9 row cannot finish a proof in that budget; its lower bound
  // still equals the proven value, so the row is inconclusive.
  CHECK(rep.rows.back().status == "inconclusive");
  CHECK(rep.rows.back().got == 168);
  CHECK_FALSE(rep.all_ok);
}
