#pragma once

#include <vector>

#include "elfarol/game.hpp"

namespace elfarol {

/// Minimum-cost correlated equilibrium over distributions supported on a
/// uniform grid, found by exact enumeration of basic feasible solutions.
/// Unlike a configuration distribution, a single-point support is allowed;
/// the search runs over the closure, which keeps degenerate parameter
/// regimes comparable with the closed form.
struct OracleSolution {
  std::vector<ConfigEntry> support;  // positive-probability grid points, ascending
  double per_capita_cost = 0.0;
  int grid_size = 0;
};

/// Oracle solution next to the closed-form mediator cost, with the
/// discretization bound L*h, L = 1 + 2*max(s1,s2), h = 1/(grid_size-1).
struct OracleComparison {
  OracleSolution oracle;
  double analytic_cost = 0.0;
  double x_star = 0.0;       // effective go configuration of the closed form
  bool degenerate = false;
  double difference = 0.0;   // |oracle cost - analytic cost|
  double bound = 0.0;
  bool within_bound = false;
  bool x_star_on_grid = false;
  bool exact_match = false;          // difference <= 1e-9
  bool support_structure_ok = false; // all-stay anchor plus at most one point near or above c/s1
  double support_distance = 0.0;     // farthest non-stay support point from x_star
};

/// Minimizes the expected social cost over probability vectors on the grid
/// g/(grid_size-1) subject to both incentive constraints. Enumerates all
/// supports of size <= 3, solving the linear system that makes the active
/// constraints tight, and keeps the feasible minimum. Deterministic; ties
/// break toward the lexicographically smallest support by grid index.
/// Throws std::invalid_argument for grid_size < 2 and std::runtime_error if
/// no feasible grid solution exists.
OracleSolution solve_grid(const GameParams& params, int grid_size);

OracleComparison compare_with_closed_form(const GameParams& params,
                                          int grid_size);

}  // namespace elfarol
