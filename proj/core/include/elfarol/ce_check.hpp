#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "elfarol/game.hpp"

namespace elfarol {

/// The two incentive constraints of a configuration distribution, expressed
/// as advantage-weighted sums. The distribution is a correlated equilibrium
/// iff go_side >= 0 (players told to go do not prefer staying) and
/// stay_side <= 0 (players told to stay do not prefer going).
struct CeSlacks {
  double go_side = 0.0;   // sum of p * x * advantage
  double stay_side = 0.0;  // sum of p * (1-x) * advantage
};

struct CeVerdict {
  double go_side_slack = 0.0;
  double stay_side_slack = 0.0;
  bool is_ce = false;
};

/// Expected cost of going conditioned on the advice received. A field is
/// empty when the conditioning event has zero probability. The matching
/// stay costs are identically 1.
struct ConditionalCosts {
  std::optional<double> go_given_go;
  std::optional<double> go_given_stay;
};

/// Raw slack sums over any entry list (no distribution validation), shared
/// with the grid oracle where single-point supports are allowed.
CeSlacks ce_slacks(const GameParams& params, std::span<const ConfigEntry> entries);

/// Evaluates both incentive constraints; is_ce holds iff the go-side slack
/// is >= -tol and the stay-side slack is <= +tol.
CeVerdict verify_ce(const GameParams& params, const ConfigDistribution& dist,
                    double tol = kDefaultCeTol);

ConditionalCosts conditional_costs(const GameParams& params,
                                   const ConfigDistribution& dist);

// Cost-reducing rewrites used to collapse a correlated equilibrium toward
// the two-configuration shape. Each is a partial function; precondition
// violations throw std::invalid_argument. Applied to a correlated
// equilibrium where they fire, each keeps the CE property and strictly
// lowers the expected social cost.

/// Removes entry j, whose go advantage must be zero (within kBoundaryTol),
/// and rescales the rest. Needs k >= 3 so the result stays a distribution.
ConfigDistribution reduce_drop_indifferent(const GameParams& params,
                                           const ConfigDistribution& dist,
                                           std::size_t j);

/// Sends entry j, which must lie strictly inside (0, (c-1)/s1), to the
/// all-stay configuration. Requires c > 1 and a correlated equilibrium input.
ConfigDistribution reduce_move_to_stay(const GameParams& params,
                                       const ConfigDistribution& dist,
                                       std::size_t j);

/// Replaces entry j, strictly inside ((c-1)/s1, c/s1), by the equal-cost
/// fraction on the ascending branch, or by full attendance when no such
/// fraction exists in range. Requires c > 1 and a correlated equilibrium input.
ConfigDistribution reduce_reflect(const GameParams& params,
                                  const ConfigDistribution& dist,
                                  std::size_t j);

/// Merges entries i and j, with x_j > x_i >= c/s1, into their
/// probability-weighted mean. Needs k >= 3 so the result stays a distribution.
ConfigDistribution reduce_merge(const GameParams& params,
                                const ConfigDistribution& dist, std::size_t i,
                                std::size_t j);

/// Applies the rewrites (drop, move, reflect, merge, in that order) until
/// none fires, coalescing exact duplicates created along the way. Requires
/// c > 1 and a correlated equilibrium input. For inputs free of indifferent
/// configurations the result has the two-configuration shape: the all-stay
/// configuration plus at most one configuration at or above c/s1.
ConfigDistribution reduce_to_fixpoint(const GameParams& params,
                                      const ConfigDistribution& dist);

}  // namespace elfarol
