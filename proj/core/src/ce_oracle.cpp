#include "elfarol/ce_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "elfarol/analytic.hpp"
#include "elfarol/ce_check.hpp"

namespace elfarol {

namespace {

constexpr double kFeasTol = 1e-10;   // slack violation allowed on constraints
constexpr double kSnapTol = 1e-12;   // probabilities below this snap to 0
constexpr double kTieTol = 1e-12;    // cost window treated as a tie

struct Candidate {
  std::array<int, 3> idx{-1, -1, -1};
  std::array<double, 3> p{0.0, 0.0, 0.0};
  int size = 0;
  double cost = 0.0;
};

// Grid data: fractions plus the per-point constraint coefficients.
struct Grid {
  std::vector<double> x;
  std::vector<double> go;    // x * advantage
  std::vector<double> stay;  // (1-x) * advantage
};

bool lex_less(const Candidate& a, const Candidate& b) {
  return std::lexicographical_compare(a.idx.begin(), a.idx.begin() + a.size,
                                      b.idx.begin(), b.idx.begin() + b.size);
}

// Validates probabilities and both constraints; fills cost on success.
bool accept(const Grid& grid, Candidate& cand) {
  double go = 0.0, stay = 0.0;
  int out = 0;
  std::array<int, 3> idx{-1, -1, -1};
  std::array<double, 3> p{0.0, 0.0, 0.0};
  for (int i = 0; i < cand.size; ++i) {
    double pi = cand.p[i];
    if (!(pi >= -kFeasTol && pi <= 1.0 + kFeasTol)) return false;
    if (pi < kSnapTol) continue;
    idx[out] = cand.idx[i];
    p[out] = pi;
    ++out;
    const int g = cand.idx[i];
    go += pi * grid.go[g];
    stay += pi * grid.stay[g];
  }
  if (out == 0) return false;
  if (go < -kFeasTol || stay > kFeasTol) return false;
  cand.idx = idx;
  cand.p = p;
  cand.size = out;
  cand.cost = 1.0 - go;
  return true;
}

void offer(const Grid& grid, Candidate cand, Candidate& best, bool& have_best) {
  if (!accept(grid, cand)) return;
  if (!have_best || cand.cost < best.cost - kTieTol ||
      (cand.cost <= best.cost + kTieTol && lex_less(cand, best))) {
    best = cand;
    have_best = true;
  }
}

}  // namespace

OracleSolution solve_grid(const GameParams& params, int grid_size) {
  require_valid(params);
  if (grid_size < 2) {
    throw std::invalid_argument("grid size must be at least 2, got " +
                                std::to_string(grid_size));
  }
  const int m = grid_size;
  Grid grid;
  grid.x.resize(m);
  grid.go.resize(m);
  grid.stay.resize(m);
  for (int g = 0; g < m; ++g) {
    const double x = static_cast<double>(g) / (m - 1);
    const double adv = go_advantage(params, x);
    grid.x[g] = x;
    grid.go[g] = x * adv;
    grid.stay[g] = (1.0 - x) * adv;
  }

  Candidate best;
  bool have_best = false;

  // Size 1: all mass on one point, both constraints checked directly.
  for (int g = 0; g < m; ++g) {
    Candidate cand;
    cand.size = 1;
    cand.idx[0] = g;
    cand.p[0] = 1.0;
    offer(grid, cand, best, have_best);
  }

  // Size 2: one of the two inequality constraints tight.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (const std::vector<double>* row : {&grid.go, &grid.stay}) {
        const double ai = (*row)[i];
        const double aj = (*row)[j];
        const double det = aj - ai;
        if (std::abs(det) < 1e-30) continue;
        Candidate cand;
        cand.size = 2;
        cand.idx = {i, j, -1};
        cand.p = {aj / det, -ai / det, 0.0};
        offer(grid, cand, best, have_best);
      }
    }
  }

  // Size 3: both inequality constraints tight; Cramer on the 3x3 system
  // [1 1 1; go_i go_j go_k; stay_i stay_j stay_k] p = [1 0 0].
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double aj_i = grid.go[i], aj_j = grid.go[j];
      const double bj_i = grid.stay[i], bj_j = grid.stay[j];
      for (int k = j + 1; k < m; ++k) {
        const double a3 = grid.go[k];
        const double b3 = grid.stay[k];
        const double det = (aj_j * b3 - a3 * bj_j) - (aj_i * b3 - a3 * bj_i) +
                           (aj_i * bj_j - aj_j * bj_i);
        if (std::abs(det) < 1e-30) continue;
        // Column replacement by the right-hand side (1,0,0).
        const double d1 = aj_j * b3 - a3 * bj_j;
        const double d2 = a3 * bj_i - aj_i * b3;
        const double d3 = aj_i * bj_j - aj_j * bj_i;
        Candidate cand;
        cand.size = 3;
        cand.idx = {i, j, k};
        cand.p = {d1 / det, d2 / det, d3 / det};
        offer(grid, cand, best, have_best);
      }
    }
  }

  if (!have_best) {
    throw std::runtime_error("no feasible grid correlated equilibrium found");
  }

  OracleSolution sol;
  sol.grid_size = m;
  sol.per_capita_cost = best.cost;
  for (int i = 0; i < best.size; ++i) {
    sol.support.push_back({grid.x[best.idx[i]], best.p[i]});
  }
  std::sort(sol.support.begin(), sol.support.end(),
            [](const ConfigEntry& a, const ConfigEntry& b) { return a.x < b.x; });
  return sol;
}

OracleComparison compare_with_closed_form(const GameParams& params,
                                          int grid_size) {
  OracleComparison cmp;
  cmp.oracle = solve_grid(params, grid_size);
  const MediatorReport med = best_mediator(params);
  cmp.analytic_cost = med.per_capita_cost;
  cmp.x_star = med.x_star;
  cmp.degenerate = med.degenerate;
  cmp.difference = std::abs(cmp.oracle.per_capita_cost - med.per_capita_cost);
  const double h = 1.0 / (grid_size - 1);
  cmp.bound = (1.0 + 2.0 * std::max(params.s1, params.s2)) * h;
  cmp.within_bound = cmp.difference <= cmp.bound;
  cmp.exact_match = cmp.difference <= 1e-9;

  double nearest = 1.0;
  for (int g = 0; g < grid_size; ++g) {
    nearest = std::min(nearest, std::abs(static_cast<double>(g) / (grid_size - 1) -
                                         med.x_star));
  }
  cmp.x_star_on_grid = nearest <= 1e-12;

  const double kink = params.kink();
  for (const ConfigEntry& e : cmp.oracle.support) {
    if (e.x != 0.0) {
      cmp.support_distance =
          std::max(cmp.support_distance, std::abs(e.x - med.x_star));
    }
  }
  if (!med.degenerate) {
    bool has_stay_anchor = false;
    int near_or_above_kink = 0;
    bool interior = false;
    for (const ConfigEntry& e : cmp.oracle.support) {
      if (e.x == 0.0) {
        has_stay_anchor = true;
      } else if (e.x >= kink - h - 1e-12) {
        ++near_or_above_kink;
      } else {
        interior = true;  // strictly inside (0, c/s1), beyond one grid step
      }
    }
    cmp.support_structure_ok =
        has_stay_anchor && near_or_above_kink <= 1 && !interior;
  } else if (params.c > 1.0) {
    // Stationary point at or past 1: the single full-attendance configuration.
    cmp.support_structure_ok =
        cmp.oracle.support.size() == 1 && cmp.oracle.support[0].x == 1.0;
  } else {
    cmp.support_structure_ok = true;  // no structural claim for c <= 1
  }
  return cmp;
}

}  // namespace elfarol
