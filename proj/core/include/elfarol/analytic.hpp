#pragma once

#include <optional>

#include "elfarol/game.hpp"

namespace elfarol {

enum class NashRegime { mixed_indifference, all_go };

/// Cheapest Nash equilibrium. When full attendance costs at least as much as
/// staying, players mix until going and staying cost the same (per-capita
/// cost 1); otherwise everyone goes and pays f(1).
struct NashReport {
  NashRegime regime = NashRegime::mixed_indifference;
  double go_fraction = 0.0;  // expected fraction that goes
  double per_capita_cost = 0.0;
};

/// Cheapest correlated equilibrium. In the generic case the mediator
/// randomizes over two configurations: with probability `p` everyone is told
/// to stay, otherwise an `x_star` fraction is told to go. `degenerate` marks
/// the collapses to a single configuration (c <= 1, or the stationary point
/// landing at or beyond full attendance), where the best correlated
/// equilibrium coincides with the best Nash equilibrium. In those cases
/// `x_star` holds the single effective configuration and `p` is 0.
struct MediatorReport {
  std::optional<double> stationary_fraction;  // defined only for c > 1
  double x_star = 0.0;
  double p = 0.0;
  std::optional<ConfigDistribution> dist;  // absent when degenerate
  double per_capita_cost = 0.0;
  bool degenerate = false;
};

/// Bundle of the closed-form analysis for one parameter set.
struct EquilibriumReport {
  GameParams params;
  double y_star = 0.0;  // socially optimal go fraction
  double opt_cost = 0.0;
  NashReport nash;
  MediatorReport mediator;
  double mv = 0.0;  // nash cost / mediator cost
  double ev = 0.0;  // mediator cost / optimal cost, +inf when opt_cost is 0
};

/// Parameter families along which one of the two ratios grows without bound
/// as epsilon shrinks.
enum class FamilyKind { unbounded_mv, unbounded_ev };

/// Go fraction minimizing the social cost x*f(x) + (1-x).
double optimal_fraction(const GameParams& params);

/// Minimum per-capita social cost over all configurations.
double optimal_social_cost(const GameParams& params);

NashReport best_nash(const GameParams& params);

/// Unconstrained stationary point of the mediator cost in the go fraction,
/// c*(1/s1 + 1/s2) - sqrt(c*(1/s1 + 1/s2)*(c-1)/s2). Always below
/// c/s1 + 1/s2. Throws std::domain_error unless c > 1.
double stationary_go_fraction(const GameParams& params);

/// Cheapest correlated equilibrium: clamps the stationary point into
/// [c/s1, 1) and picks the smallest stay probability that keeps players
/// told to stay from preferring to go (that constraint ends up tight).
MediatorReport best_mediator(const GameParams& params);

/// Best Nash cost divided by best mediator cost. At least 1; exactly 1 when
/// c <= 1 or the stationary point reaches 1.
double mediation_value(const GameParams& params);

/// Best mediator cost divided by the optimal social cost. At least 1;
/// +infinity if the optimal cost were 0 (excluded by c < s1).
double enforcement_value(const GameParams& params);

/// Parameter set of the requested family at the given epsilon in (0,1):
/// unbounded_mv -> (2+e, (2+e)/(1-e), 1/e), unbounded_ev -> (1+e, (1+e)/(1-e), 1/e).
GameParams make_family(FamilyKind kind, double epsilon);

/// Full report: optimum, best Nash, best mediator, and both ratios.
EquilibriumReport analyze(const GameParams& params);

}  // namespace elfarol
