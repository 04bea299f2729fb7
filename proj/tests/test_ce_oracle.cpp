#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "elfarol/analytic.hpp"
#include "elfarol/ce_check.hpp"
#include "elfarol/ce_oracle.hpp"
#include "support/oracles.hpp"

using namespace elfarol;
using testsupport::random_params_c_above_1;

namespace {
const GameParams kWorked{2.0, 4.0, 10.0};
}

TEST_CASE("grid search recovers the worked instance exactly") {
  const OracleSolution sol = solve_grid(kWorked, 201);
  CHECK(sol.per_capita_cost == doctest::Approx(2.0 / 3).epsilon(1e-12));
  REQUIRE(sol.support.size() == 2);
  CHECK(sol.support[0].x == 0.0);
  CHECK(sol.support[0].p == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(sol.support[1].x == 0.5);
  CHECK(sol.support[1].p == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("grid search handles the cheap-stay regime") {
  const GameParams g{0.5, 1.0, 1.0};
  const OracleSolution sol = solve_grid(g, 201);
  // Best correlated play collapses to everyone going, at cost f(1).
  REQUIRE(sol.support.size() == 1);
  CHECK(sol.support[0].x == 1.0);
  CHECK(sol.per_capita_cost == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(sol.per_capita_cost ==
        doctest::Approx(best_mediator(g).per_capita_cost).epsilon(1e-10));
}

TEST_CASE("a coarse grid containing the closed-form point is exact") {
  const GameParams g = make_family(FamilyKind::unbounded_mv, 0.1);
  const OracleSolution sol = solve_grid(g, 11);  // includes 0.9
  CHECK(sol.per_capita_cost == doctest::Approx(0.175).epsilon(1e-10));
}

TEST_CASE("grid size validation and the two-point edge grid") {
  CHECK_THROWS_AS(solve_grid(kWorked, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_grid(kWorked, 0), std::invalid_argument);
  // Only {0,1} available: all-stay is the only feasible point here.
  const OracleSolution sol = solve_grid(kWorked, 2);
  REQUIRE(sol.support.size() == 1);
  CHECK(sol.support[0].x == 0.0);
  CHECK(sol.per_capita_cost == doctest::Approx(1.0).epsilon(1e-12));

  // With c < 1 neither endpoint is self-enforcing and a two-point grid has
  // no feasible solution at all.
  CHECK_THROWS_AS(solve_grid(GameParams{0.5, 1.0, 3.0}, 2),
                  std::runtime_error);
}

TEST_CASE("oracle solutions satisfy both incentive constraints") {
  std::mt19937_64 rng(401);
  for (int i = 0; i < 25; ++i) {
    const GameParams g = random_params_c_above_1(rng);
    const OracleSolution sol = solve_grid(g, 101);
    const CeSlacks slacks = ce_slacks(g, sol.support);
    CHECK(slacks.go_side >= -1e-9);
    CHECK(slacks.stay_side <= 1e-9);
    double sum = 0.0;
    for (const ConfigEntry& e : sol.support) {
      CHECK(e.p > 0.0);
      sum += e.p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sol.support.size() <= 3);
  }
}

TEST_CASE("comparison report on the named instances") {
  const OracleComparison worked = compare_with_closed_form(kWorked, 201);
  CHECK(worked.difference <= 1e-12);
  CHECK(worked.exact_match);
  CHECK(worked.x_star_on_grid);
  CHECK(worked.within_bound);
  CHECK(worked.support_structure_ok);
  CHECK(worked.bound == doctest::Approx(21.0 / 200).epsilon(1e-12));

  const OracleComparison off_grid =
      compare_with_closed_form(make_family(FamilyKind::unbounded_ev, 0.1), 1001);
  CHECK_FALSE(off_grid.x_star_on_grid);
  CHECK(off_grid.difference <= 0.03);
  CHECK(off_grid.within_bound);
  CHECK(off_grid.support_structure_ok);

  const OracleComparison cheap =
      compare_with_closed_form(GameParams{0.5, 1.0, 1.0}, 201);
  CHECK(cheap.degenerate);
  CHECK(cheap.within_bound);
}

TEST_CASE("oracle cost brackets the closed form") {
  std::mt19937_64 rng(402);
  for (int i = 0; i < 25; ++i) {
    const GameParams g = random_params_c_above_1(rng);
    const OracleComparison cmp = compare_with_closed_form(g, 101);
    // Grid-supported equilibria are a subset, so the oracle can never beat
    // the closed form; the discretization bound caps the loss.
    CHECK(cmp.oracle.per_capita_cost >= cmp.analytic_cost - 1e-9);
    CHECK(cmp.within_bound);
    CHECK(cmp.support_structure_ok);
    // The crowded support point tracks the closed-form fraction.
    CHECK(cmp.support_distance <= 1.0 / 100 + 1e-12);
    if (cmp.x_star_on_grid) {
      CHECK(cmp.oracle.per_capita_cost <= cmp.analytic_cost + 1e-9);
    }
  }
}

TEST_CASE("grid search is deterministic") {
  const OracleSolution a = solve_grid(kWorked, 87);
  const OracleSolution b = solve_grid(kWorked, 87);
  REQUIRE(a.support.size() == b.support.size());
  CHECK(a.per_capita_cost == b.per_capita_cost);
  for (std::size_t i = 0; i < a.support.size(); ++i) {
    CHECK(a.support[i].x == b.support[i].x);
    CHECK(a.support[i].p == b.support[i].p);
  }
}
