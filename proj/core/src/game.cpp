#include "elfarol/game.hpp"

#include <cmath>
#include <stdexcept>

namespace elfarol {

namespace {

void require_fraction(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("go fraction must lie in [0,1], got " +
                            std::to_string(x));
  }
}

}  // namespace

void require_valid(const GameParams& params) {
  if (!std::isfinite(params.c) || !std::isfinite(params.s1) ||
      !std::isfinite(params.s2)) {
    throw std::invalid_argument("game parameters must be finite");
  }
  if (!(params.c > 0.0 && params.c < params.s1)) {
    throw std::invalid_argument(
        "game parameters require 0 < c < s1, got c=" + std::to_string(params.c) +
        " s1=" + std::to_string(params.s1));
  }
  if (!(params.s2 > 0.0)) {
    throw std::invalid_argument("game parameters require s2 > 0, got s2=" +
                                std::to_string(params.s2));
  }
}

double cost_to_go(const GameParams& params, double x) {
  require_valid(params);
  require_fraction(x);
  const double kink = params.kink();
  if (x < kink) return params.c - params.s1 * x;
  return params.s2 * (x - kink);
}

double go_advantage(const GameParams& params, double x) {
  return 1.0 - cost_to_go(params, x);
}

Sign classify_go_advantage(const GameParams& params, double x) {
  require_valid(params);
  require_fraction(x);
  // Advantage zeros: one on the descending branch, one on the ascending
  // branch when it lies inside [0,1].
  const double descending_zero = (params.c - 1.0) / params.s1;
  const double ascending_zero = params.kink() + 1.0 / params.s2;
  if (std::abs(x - descending_zero) <= kBoundaryTol) return Sign::zero;
  if (std::abs(x - ascending_zero) <= kBoundaryTol) return Sign::zero;
  const double adv = go_advantage(params, x);
  if (adv > 0.0) return Sign::positive;
  if (adv < 0.0) return Sign::negative;
  return Sign::zero;
}

double config_social_cost(const GameParams& params, double x) {
  return x * cost_to_go(params, x) + (1.0 - x);
}

double expected_social_cost(const GameParams& params,
                            const ConfigDistribution& dist) {
  require_valid(params);
  const ValidationResult check = validate_distribution(dist);
  if (!check.ok()) {
    throw std::invalid_argument("invalid distribution: " + *check.violation);
  }
  double cost = 0.0;
  for (const ConfigEntry& e : dist.entries) {
    cost += e.p * config_social_cost(params, e.x);
  }
  return cost;
}

ValidationResult validate_distribution(const ConfigDistribution& dist) {
  const auto& entries = dist.entries;
  if (entries.size() < 2) {
    return {"needs at least 2 configurations, got " +
            std::to_string(entries.size())};
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i].x >= 0.0 && entries[i].x <= 1.0)) {
      return {"configuration " + std::to_string(i) + ": fraction " +
              std::to_string(entries[i].x) + " outside [0,1]"};
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!(entries[i].p > 0.0 && entries[i].p < 1.0)) {
      return {"configuration " + std::to_string(i) + ": probability " +
              std::to_string(entries[i].p) + " outside (0,1)"};
    }
    sum += entries[i].p;
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    return {"probabilities sum to " + std::to_string(sum) + ", expected 1"};
  }
  // Distinctness is exact: configurations are labels, not measurements.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].x == entries[j].x) {
        return {"duplicate configuration x=" + std::to_string(entries[i].x)};
      }
    }
  }
  return {};
}

GameParams normalize(const RawGameParams& raw) {
  if (!std::isfinite(raw.c) || !std::isfinite(raw.s1) ||
      !std::isfinite(raw.s2) || !std::isfinite(raw.stay_cost)) {
    throw std::invalid_argument("raw game parameters must be finite");
  }
  if (!(raw.stay_cost > 0.0)) {
    throw std::invalid_argument("cost to stay must be positive, got " +
                                std::to_string(raw.stay_cost));
  }
  if (!(raw.c > 0.0 && raw.c < raw.s1) || !(raw.s2 > 0.0)) {
    throw std::invalid_argument("raw game parameters require 0 < c < s1 and s2 > 0");
  }
  return GameParams{raw.c / raw.stay_cost, raw.s1 / raw.stay_cost,
                    raw.s2 / raw.stay_cost};
}

}  // namespace elfarol
