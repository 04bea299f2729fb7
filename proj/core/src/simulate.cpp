#include "elfarol/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

namespace elfarol {

namespace {

// 53-bit uniform in [0,1); fixed construction so the stream depends only on
// the engine, not on library-specific distribution internals.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct RunningMoments {
  long long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++count;
    const double d = v - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (v - mean);
  }
  double standard_error() const {
    if (count < 2) return 0.0;
    const double var = m2 / static_cast<double>(count - 1);
    return std::sqrt(var / static_cast<double>(count));
  }
};

bool same_inputs(const GameParams& a, const GameParams& b) {
  return a.c == b.c && a.s1 == b.s1 && a.s2 == b.s2;
}

bool same_inputs(const ConfigDistribution& a, const ConfigDistribution& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].x != b.entries[i].x || a.entries[i].p != b.entries[i].p)
      return false;
  }
  return true;
}

}  // namespace

SimulationStats run_simulation(const GameParams& params,
                               const ConfigDistribution& dist,
                               const SimConfig& config, std::ostream* trace) {
  require_valid(params);
  const ValidationResult check = validate_distribution(dist);
  if (!check.ok()) {
    throw std::invalid_argument("invalid distribution: " + *check.violation);
  }
  if (config.n < 2) {
    throw std::invalid_argument("player count must be at least 2");
  }
  if (config.rounds < 1) {
    throw std::invalid_argument("round count must be at least 1");
  }

  std::mt19937_64 rng(config.seed);
  const double n = static_cast<double>(config.n);

  RunningMoments cost_moments;
  RunningMoments tagged_go;
  RunningMoments tagged_stay;

  for (long long round = 0; round < config.rounds; ++round) {
    // Pick the round's configuration from the cumulative distribution.
    const double u = next_unit(rng);
    double acc = 0.0;
    const ConfigEntry* picked = &dist.entries.back();
    for (const ConfigEntry& e : dist.entries) {
      acc += e.p;
      if (u < acc) {
        picked = &e;
        break;
      }
    }
    // Exactly round(x*n) players are advised to go, chosen uniformly; the
    // tagged player (index 0) lands in that set with probability g/n.
    const long long g = std::llround(picked->x * n);
    const double realized = static_cast<double>(g) / n;
    const double go_cost = cost_to_go(params, realized);
    const double cost = realized * go_cost + (1.0 - realized);
    cost_moments.add(cost);

    const bool tagged_goes = next_unit(rng) < realized;
    if (tagged_goes) {
      tagged_go.add(go_cost);
    } else {
      tagged_stay.add(go_cost);  // what going would have cost
    }

    if (trace != nullptr) {
      char line[160];
      std::snprintf(line, sizeof(line), "%lld,%.17g,%lld,%.17g,%s\n", round,
                    picked->x, g, cost, tagged_goes ? "go" : "stay");
      *trace << line;
    }
  }

  SimulationStats stats;
  stats.params = params;
  stats.dist = dist;
  stats.config = config;
  stats.rng_algorithm = "mt19937_64";
  stats.mean_per_capita_cost = cost_moments.mean;
  stats.se_per_capita_cost = cost_moments.standard_error();
  stats.rounds_go = tagged_go.count;
  stats.rounds_stay = tagged_stay.count;
  if (tagged_go.count > 0) {
    stats.tagged_go_cost_mean = tagged_go.mean;
    stats.tagged_go_cost_se = tagged_go.standard_error();
  }
  if (tagged_stay.count > 0) {
    stats.tagged_stay_hypothetical_go_mean = tagged_stay.mean;
    stats.tagged_stay_hypothetical_go_se = tagged_stay.standard_error();
  }
  return stats;
}

IncentiveVerdict check_incentives(const GameParams& params,
                                  const ConfigDistribution& dist,
                                  const SimulationStats& stats, double z) {
  if (!same_inputs(params, stats.params) || !same_inputs(dist, stats.dist)) {
    throw std::invalid_argument(
        "statistics were computed for different inputs");
  }
  if (!(z >= 0.0)) {
    throw std::invalid_argument("sigma multiplier must be nonnegative");
  }
  IncentiveVerdict verdict;
  verdict.z = z;
  // The 1e-12 slack absorbs rounding dust when a side is exactly tight with
  // near-zero sampling variance.
  verdict.go_side_pass =
      !stats.tagged_go_cost_mean.has_value() ||
      *stats.tagged_go_cost_mean <=
          1.0 + z * *stats.tagged_go_cost_se + 1e-12;
  verdict.stay_side_pass =
      !stats.tagged_stay_hypothetical_go_mean.has_value() ||
      *stats.tagged_stay_hypothetical_go_mean >=
          1.0 - z * *stats.tagged_stay_hypothetical_go_se - 1e-12;
  verdict.pass = verdict.go_side_pass && verdict.stay_side_pass;
  return verdict;
}

}  // namespace elfarol
