#pragma once

#include <optional>
#include <string>
#include <vector>

namespace elfarol {

// Tolerance for probability sums in a configuration distribution.
inline constexpr double kProbSumTol = 1e-12;
// Window around the advantage zeros inside which a fraction is classified
// as indifferent.
inline constexpr double kBoundaryTol = 1e-12;
// Default tolerance for correlated-equilibrium slack checks.
inline constexpr double kDefaultCeTol = 1e-9;

/// Parameters of the attendance game, with the cost to stay normalized to 1.
///
/// The cost to go starts at `c` when nobody attends, falls with slope `s1`
/// until it reaches zero at the fraction c/s1, then rises with slope `s2`
/// as the venue crowds. Valid parameters satisfy 0 < c < s1 and s2 > 0.
struct GameParams {
  double c = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;

  /// Fraction at which the cost to go reaches zero.
  double kink() const { return c / s1; }
};

/// Parameters before normalization, with an explicit cost to stay.
struct RawGameParams {
  double c = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double stay_cost = 1.0;
};

/// One advised outcome: a fraction `x` of players is told to go, and the
/// outcome is selected with probability `p`.
struct ConfigEntry {
  double x = 0.0;
  double p = 0.0;
};

/// Probability distribution over k >= 2 distinct configurations. This is the
/// object a mediator randomizes over. Requirements: every x in [0,1], every
/// p strictly inside (0,1), probabilities summing to 1, fractions pairwise
/// distinct.
struct ConfigDistribution {
  std::vector<ConfigEntry> entries;
};

/// Result of validate_distribution: empty on success, otherwise a
/// description of the first violated requirement.
struct ValidationResult {
  std::optional<std::string> violation;
  bool ok() const { return !violation.has_value(); }
};

enum class Sign { negative, zero, positive };

/// Throws std::invalid_argument unless 0 < c < s1 and s2 > 0 (all finite).
void require_valid(const GameParams& params);

/// Per-player cost of going when a fraction `x` attends. Piecewise linear:
/// c - s1*x on [0, c/s1], then s2*(x - c/s1) up to 1. Exactly at the kink
/// the ascending branch is used; both branches evaluate to zero there.
/// Throws std::domain_error for x outside [0,1].
double cost_to_go(const GameParams& params, double x);

/// Advantage of going over staying at fraction x: 1 - cost_to_go(x).
/// Positive means going is the cheaper action.
double go_advantage(const GameParams& params, double x);

/// Sign of the go advantage. Fractions within kBoundaryTol of an advantage
/// zero (the descending-branch point (c-1)/s1, or c/s1 + 1/s2 when that
/// lies in range) classify as Sign::zero.
Sign classify_go_advantage(const GameParams& params, double x);

/// Per-capita social cost of the single configuration with go fraction x:
/// x*f(x) + (1-x), equivalently 1 - x*(go advantage).
double config_social_cost(const GameParams& params, double x);

/// Per-capita expected social cost of a configuration distribution.
/// Throws std::invalid_argument when the distribution is invalid.
double expected_social_cost(const GameParams& params,
                            const ConfigDistribution& dist);

/// Checks all distribution requirements, reporting the first violation.
ValidationResult validate_distribution(const ConfigDistribution& dist);

/// Rescales raw parameters by the cost to stay. The resulting unit-stay-cost
/// game has the same mediation and enforcement values as the raw game.
/// Throws std::invalid_argument when the raw parameters are invalid.
GameParams normalize(const RawGameParams& raw);

}  // namespace elfarol
