#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "elfarol/game.hpp"

namespace elfarol {

struct SimConfig {
  long long n = 0;        // player count, >= 2
  long long rounds = 0;   // >= 1
  std::uint64_t seed = 0;
};

/// Round-level statistics of mediated play. Conditional means are tracked
/// for a single tagged player (index 0): the realized go cost over rounds it
/// was advised to go, and the hypothetical go cost over rounds it was
/// advised to stay. Conditional fields are empty when no round of that kind
/// occurred. The inputs are echoed so downstream checks can verify they
/// refer to the same run.
struct SimulationStats {
  GameParams params;
  ConfigDistribution dist;
  SimConfig config;
  std::string rng_algorithm;  // identifies the generator for reproducibility audits

  double mean_per_capita_cost = 0.0;
  double se_per_capita_cost = 0.0;
  std::optional<double> tagged_go_cost_mean;
  std::optional<double> tagged_go_cost_se;
  std::optional<double> tagged_stay_hypothetical_go_mean;
  std::optional<double> tagged_stay_hypothetical_go_se;
  long long rounds_go = 0;
  long long rounds_stay = 0;
};

struct IncentiveVerdict {
  bool pass = false;
  bool go_side_pass = false;   // advised-to-go cost within z standard errors of at most 1
  bool stay_side_pass = false; // hypothetical go cost within z standard errors of at least 1
  double z = 0.0;
};

/// Plays `rounds` mediated rounds with `n` players. Each round draws a
/// configuration, advises exactly round(x*n) uniformly chosen players to go,
/// and records the realized per-capita cost (g/n)*f(g/n) + (1 - g/n).
/// Identical inputs give identical stats. An optional trace stream receives
/// one CSV line per round: round,x,g,cost,tagged_advice.
SimulationStats run_simulation(const GameParams& params,
                               const ConfigDistribution& dist,
                               const SimConfig& config,
                               std::ostream* trace = nullptr);

/// Empirical incentive check at z standard errors: the tagged player's
/// advised-go cost may not exceed the stay cost 1, and its hypothetical go
/// cost while advised to stay may not fall below 1. Sides without data pass.
/// Throws std::invalid_argument when stats do not match params/dist.
IncentiveVerdict check_incentives(const GameParams& params,
                                  const ConfigDistribution& dist,
                                  const SimulationStats& stats, double z);

}  // namespace elfarol
