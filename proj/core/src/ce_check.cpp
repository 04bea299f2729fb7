#include "elfarol/ce_check.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace elfarol {

namespace {

void require_valid_dist(const ConfigDistribution& dist) {
  const ValidationResult check = validate_distribution(dist);
  if (!check.ok()) {
    throw std::invalid_argument("invalid distribution: " + *check.violation);
  }
}

void require_index(const ConfigDistribution& dist, std::size_t j) {
  if (j >= dist.entries.size()) {
    throw std::invalid_argument("configuration index " + std::to_string(j) +
                                " out of range");
  }
}

void require_ce(const GameParams& params, const ConfigDistribution& dist) {
  const CeVerdict v = verify_ce(params, dist);
  if (!v.is_ce) {
    throw std::invalid_argument("input distribution is not a correlated equilibrium");
  }
}

// Replaces the fraction of entry j, merging its probability into an existing
// entry if the target fraction is already present.
ConfigDistribution replace_fraction(const ConfigDistribution& dist,
                                    std::size_t j, double new_x) {
  ConfigDistribution out = dist;
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    if (i != j && out.entries[i].x == new_x) {
      throw std::invalid_argument("target configuration x=" +
                                  std::to_string(new_x) + " already present");
    }
  }
  out.entries[j].x = new_x;
  return out;
}

}  // namespace

CeSlacks ce_slacks(const GameParams& params,
                   std::span<const ConfigEntry> entries) {
  CeSlacks slacks;
  for (const ConfigEntry& e : entries) {
    const double adv = go_advantage(params, e.x);
    slacks.go_side += e.p * e.x * adv;
    slacks.stay_side += e.p * (1.0 - e.x) * adv;
  }
  return slacks;
}

CeVerdict verify_ce(const GameParams& params, const ConfigDistribution& dist,
                    double tol) {
  require_valid(params);
  require_valid_dist(dist);
  if (!(tol >= 0.0)) {
    throw std::invalid_argument("tolerance must be nonnegative");
  }
  const CeSlacks slacks = ce_slacks(params, dist.entries);
  return CeVerdict{slacks.go_side, slacks.stay_side,
                   slacks.go_side >= -tol && slacks.stay_side <= tol};
}

ConditionalCosts conditional_costs(const GameParams& params,
                                   const ConfigDistribution& dist) {
  require_valid(params);
  require_valid_dist(dist);
  double go_mass = 0.0, go_cost = 0.0;
  double stay_mass = 0.0, stay_cost = 0.0;
  for (const ConfigEntry& e : dist.entries) {
    const double f = cost_to_go(params, e.x);
    go_mass += e.p * e.x;
    go_cost += e.p * e.x * f;
    stay_mass += e.p * (1.0 - e.x);
    stay_cost += e.p * (1.0 - e.x) * f;
  }
  ConditionalCosts out;
  if (go_mass > 0.0) out.go_given_go = go_cost / go_mass;
  if (stay_mass > 0.0) out.go_given_stay = stay_cost / stay_mass;
  return out;
}

ConfigDistribution reduce_drop_indifferent(const GameParams& params,
                                           const ConfigDistribution& dist,
                                           std::size_t j) {
  require_valid(params);
  require_valid_dist(dist);
  require_index(dist, j);
  if (dist.entries.size() < 3) {
    throw std::invalid_argument("dropping needs at least 3 configurations");
  }
  if (std::abs(go_advantage(params, dist.entries[j].x)) > kBoundaryTol) {
    throw std::invalid_argument(
        "configuration to drop must have zero go advantage");
  }
  const double keep = 1.0 - dist.entries[j].p;
  ConfigDistribution out;
  out.entries.reserve(dist.entries.size() - 1);
  for (std::size_t i = 0; i < dist.entries.size(); ++i) {
    if (i == j) continue;
    out.entries.push_back({dist.entries[i].x, dist.entries[i].p / keep});
  }
  return out;
}

ConfigDistribution reduce_move_to_stay(const GameParams& params,
                                       const ConfigDistribution& dist,
                                       std::size_t j) {
  require_valid(params);
  require_valid_dist(dist);
  require_index(dist, j);
  if (!(params.c > 1.0)) {
    throw std::invalid_argument("move to stay requires c > 1");
  }
  const double x = dist.entries[j].x;
  const double lower_zero = (params.c - 1.0) / params.s1;
  if (!(x > 0.0 && x < lower_zero)) {
    throw std::invalid_argument(
        "configuration to move must lie strictly inside (0, (c-1)/s1)");
  }
  require_ce(params, dist);
  return replace_fraction(dist, j, 0.0);
}

ConfigDistribution reduce_reflect(const GameParams& params,
                                  const ConfigDistribution& dist,
                                  std::size_t j) {
  require_valid(params);
  require_valid_dist(dist);
  require_index(dist, j);
  if (!(params.c > 1.0)) {
    throw std::invalid_argument("reflection requires c > 1");
  }
  const double x = dist.entries[j].x;
  const double lower_zero = (params.c - 1.0) / params.s1;
  const double kink = params.kink();
  if (!(x > lower_zero && x < kink)) {
    throw std::invalid_argument(
        "configuration to reflect must lie strictly inside ((c-1)/s1, c/s1)");
  }
  require_ce(params, dist);
  const double fx = cost_to_go(params, x);
  const double full_cost = cost_to_go(params, 1.0);
  // Equal-cost fraction on the ascending branch when it exists in range,
  // full attendance otherwise.
  const double target =
      (full_cost >= 1.0 || fx <= full_cost) ? kink + fx / params.s2 : 1.0;
  return replace_fraction(dist, j, target);
}

ConfigDistribution reduce_merge(const GameParams& params,
                                const ConfigDistribution& dist, std::size_t i,
                                std::size_t j) {
  require_valid(params);
  require_valid_dist(dist);
  require_index(dist, i);
  require_index(dist, j);
  if (dist.entries.size() < 3) {
    throw std::invalid_argument("merging needs at least 3 configurations");
  }
  const double xi = dist.entries[i].x;
  const double xj = dist.entries[j].x;
  if (!(xj > xi && xi >= params.kink())) {
    throw std::invalid_argument(
        "merging requires x_j > x_i >= c/s1");
  }
  const double pi = dist.entries[i].p;
  const double pj = dist.entries[j].p;
  const double merged_x = (pi * xi + pj * xj) / (pi + pj);
  ConfigDistribution out;
  out.entries.reserve(dist.entries.size() - 1);
  for (std::size_t k = 0; k < dist.entries.size(); ++k) {
    if (k == i) continue;
    if (k == j) {
      out.entries.push_back({merged_x, pi + pj});
    } else {
      out.entries.push_back(dist.entries[k]);
    }
  }
  const ValidationResult check = validate_distribution(out);
  if (!check.ok()) {
    throw std::invalid_argument("merge result invalid: " + *check.violation);
  }
  return out;
}

namespace {

// Sets entry j to new_x, folding its probability into an existing entry with
// the same fraction if there is one.
void set_fraction_coalescing(std::vector<ConfigEntry>& entries, std::size_t j,
                             double new_x) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i != j && entries[i].x == new_x) {
      entries[i].p += entries[j].p;
      entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(j));
      return;
    }
  }
  entries[j].x = new_x;
}

}  // namespace

ConfigDistribution reduce_to_fixpoint(const GameParams& params,
                                      const ConfigDistribution& dist) {
  require_valid(params);
  require_valid_dist(dist);
  if (!(params.c > 1.0)) {
    throw std::invalid_argument("fixpoint reduction requires c > 1");
  }
  require_ce(params, dist);

  std::vector<ConfigEntry> entries = dist.entries;
  const double lower_zero = (params.c - 1.0) / params.s1;
  const double kink = params.kink();
  const double full_cost = cost_to_go(params, 1.0);

  // Every step removes an entry or moves one out of (0, c/s1), so the loop
  // ends after at most 2k steps.
  const std::size_t max_steps = 2 * entries.size() + 8;
  for (std::size_t step = 0; step < max_steps; ++step) {
    bool fired = false;

    if (entries.size() >= 3) {
      for (std::size_t j = 0; j < entries.size(); ++j) {
        if (std::abs(go_advantage(params, entries[j].x)) <= kBoundaryTol) {
          const double keep = 1.0 - entries[j].p;
          entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(j));
          for (ConfigEntry& e : entries) e.p /= keep;
          fired = true;
          break;
        }
      }
    }
    if (fired) continue;

    for (std::size_t j = 0; j < entries.size() && !fired; ++j) {
      const double x = entries[j].x;
      if (x > 0.0 && x < lower_zero &&
          std::abs(go_advantage(params, x)) > kBoundaryTol) {
        set_fraction_coalescing(entries, j, 0.0);
        fired = true;
      }
    }
    if (fired) continue;

    for (std::size_t j = 0; j < entries.size() && !fired; ++j) {
      const double x = entries[j].x;
      if (x > lower_zero && x < kink &&
          std::abs(go_advantage(params, x)) > kBoundaryTol) {
        const double fx = cost_to_go(params, x);
        const double target =
            (full_cost >= 1.0 || fx <= full_cost) ? kink + fx / params.s2 : 1.0;
        set_fraction_coalescing(entries, j, target);
        fired = true;
      }
    }
    if (fired) continue;

    for (std::size_t i = 0; i < entries.size() && !fired; ++i) {
      if (entries[i].x < kink) continue;
      for (std::size_t j = i + 1; j < entries.size() && !fired; ++j) {
        if (entries[j].x < kink) continue;
        const double pi = entries[i].p;
        const double pj = entries[j].p;
        const double merged_x =
            (pi * entries[i].x + pj * entries[j].x) / (pi + pj);
        entries[i] = {merged_x, pi + pj};
        entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(j));
        // The mean can land on a third ascending entry; fold if so.
        for (std::size_t k = 0; k < entries.size(); ++k) {
          if (k != i && entries[k].x == entries[i].x) {
            entries[k].p += entries[i].p;
            entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(i));
            break;
          }
        }
        fired = true;
      }
    }

    if (!fired) break;
  }

  ConfigDistribution out{std::move(entries)};
  const ValidationResult check = validate_distribution(out);
  if (!check.ok()) {
    throw std::logic_error("fixpoint reduction produced invalid distribution: " +
                           *check.violation);
  }
  return out;
}

}  // namespace elfarol
