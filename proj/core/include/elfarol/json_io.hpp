#pragma once

#include <nlohmann/json.hpp>

#include "elfarol/analytic.hpp"
#include "elfarol/ce_oracle.hpp"
#include "elfarol/game.hpp"
#include "elfarol/simulate.hpp"

namespace elfarol {

using json = nlohmann::ordered_json;

void to_json(json& j, const GameParams& params);
void from_json(const json& j, GameParams& params);

void to_json(json& j, const ConfigEntry& entry);
void from_json(const json& j, ConfigEntry& entry);

void to_json(json& j, const ConfigDistribution& dist);
void from_json(const json& j, ConfigDistribution& dist);

/// Flat report with the stable field names y_star, opt, nash_cost, lambda,
/// x_star, p, med, mv, ev, degenerate. An infinite enforcement value is
/// emitted as the string "inf"; an undefined stationary fraction as null.
json report_to_json(const EquilibriumReport& report);

json oracle_solution_to_json(const OracleSolution& sol);
json oracle_comparison_to_json(const OracleComparison& cmp);

json stats_to_json(const SimulationStats& stats);
json verdict_to_json(const IncentiveVerdict& verdict);

}  // namespace elfarol
