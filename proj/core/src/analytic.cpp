#include "elfarol/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace elfarol {

double optimal_fraction(const GameParams& params) {
  require_valid(params);
  const double kink = params.kink();
  const double mid = 0.5 * (kink + 1.0 / params.s2);
  if (kink <= mid && mid <= 1.0) return mid;
  if (1.0 / params.s2 < kink) return kink;
  return 1.0;
}

double optimal_social_cost(const GameParams& params) {
  const double y = optimal_fraction(params);
  return config_social_cost(params, y);
}

NashReport best_nash(const GameParams& params) {
  require_valid(params);
  const double full_cost = cost_to_go(params, 1.0);
  if (full_cost >= 1.0) {
    // Mix until going costs the same as staying; the indifferent fraction on
    // the ascending branch is in range exactly when f(1) >= 1.
    return NashReport{NashRegime::mixed_indifference,
                      params.kink() + 1.0 / params.s2, 1.0};
  }
  return NashReport{NashRegime::all_go, 1.0, full_cost};
}

double stationary_go_fraction(const GameParams& params) {
  require_valid(params);
  if (!(params.c > 1.0)) {
    throw std::domain_error(
        "stationary go fraction requires c > 1, got c=" + std::to_string(params.c));
  }
  const double a = params.c * (1.0 / params.s1 + 1.0 / params.s2);
  return a - std::sqrt(a * (params.c - 1.0) / params.s2);
}

MediatorReport best_mediator(const GameParams& params) {
  require_valid(params);
  MediatorReport report;
  const double full_cost = cost_to_go(params, 1.0);

  if (params.c <= 1.0) {
    // Telling anyone to stay cannot be made incentive compatible at a gain:
    // the best correlated equilibrium is the best Nash equilibrium.
    report.degenerate = true;
    report.p = 0.0;
    report.x_star =
        full_cost < 1.0 ? 1.0 : params.kink() + 1.0 / params.s2;
    report.per_capita_cost = std::min(1.0, full_cost);
    return report;
  }

  const double stationary = stationary_go_fraction(params);
  report.stationary_fraction = stationary;
  const double kink = params.kink();
  double x = 0.0;
  if (stationary >= kink && stationary < 1.0) {
    x = stationary;
  } else if (stationary < kink) {
    x = kink;
  } else {
    x = 1.0;
  }
  const double fx = cost_to_go(params, x);
  const double w = (1.0 - x) * (1.0 - fx);
  const double p = w / (w + params.c - 1.0);
  report.x_star = x;
  report.p = p;
  report.per_capita_cost = p + (1.0 - p) * (x * fx + (1.0 - x));
  if (p == 0.0) {
    report.degenerate = true;  // single configuration, everyone goes
  } else {
    report.dist = ConfigDistribution{{{0.0, p}, {x, 1.0 - p}}};
  }
  return report;
}

double mediation_value(const GameParams& params) {
  require_valid(params);
  if (params.c <= 1.0) return 1.0;
  if (stationary_go_fraction(params) >= 1.0) return 1.0;
  const double nash_cost = std::min(1.0, cost_to_go(params, 1.0));
  return nash_cost / best_mediator(params).per_capita_cost;
}

double enforcement_value(const GameParams& params) {
  const double opt = optimal_social_cost(params);
  const double med = best_mediator(params).per_capita_cost;
  if (opt <= 0.0) return std::numeric_limits<double>::infinity();
  return med / opt;
}

GameParams make_family(FamilyKind kind, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("family epsilon must lie in (0,1), got " +
                            std::to_string(epsilon));
  }
  const double base = kind == FamilyKind::unbounded_mv ? 2.0 : 1.0;
  return GameParams{base + epsilon, (base + epsilon) / (1.0 - epsilon),
                    1.0 / epsilon};
}

EquilibriumReport analyze(const GameParams& params) {
  require_valid(params);
  EquilibriumReport report;
  report.params = params;
  report.y_star = optimal_fraction(params);
  report.opt_cost = config_social_cost(params, report.y_star);
  report.nash = best_nash(params);
  report.mediator = best_mediator(params);
  report.mv = report.nash.per_capita_cost / report.mediator.per_capita_cost;
  report.ev = report.opt_cost > 0.0
                  ? report.mediator.per_capita_cost / report.opt_cost
                  : std::numeric_limits<double>::infinity();
  return report;
}

}  // namespace elfarol
