#include "elfarol/json_io.hpp"

#include <cmath>

namespace elfarol {

namespace {

json finite_or_inf(double v) {
  if (std::isinf(v)) return json("inf");
  return json(v);
}

}  // namespace

void to_json(json& j, const GameParams& params) {
  j = json{{"c", params.c}, {"s1", params.s1}, {"s2", params.s2}};
}

void from_json(const json& j, GameParams& params) {
  j.at("c").get_to(params.c);
  j.at("s1").get_to(params.s1);
  j.at("s2").get_to(params.s2);
}

void to_json(json& j, const ConfigEntry& entry) {
  j = json{{"x", entry.x}, {"p", entry.p}};
}

void from_json(const json& j, ConfigEntry& entry) {
  j.at("x").get_to(entry.x);
  j.at("p").get_to(entry.p);
}

void to_json(json& j, const ConfigDistribution& dist) {
  j = json{{"entries", dist.entries}};
}

void from_json(const json& j, ConfigDistribution& dist) {
  j.at("entries").get_to(dist.entries);
}

json report_to_json(const EquilibriumReport& report) {
  json j;
  j["params"] = report.params;
  j["y_star"] = report.y_star;
  j["opt"] = report.opt_cost;
  j["nash_cost"] = report.nash.per_capita_cost;
  j["nash_regime"] = report.nash.regime == NashRegime::mixed_indifference
                         ? "mixed_indifference"
                         : "all_go";
  j["nash_y"] = report.nash.go_fraction;
  j["lambda"] = report.mediator.stationary_fraction.has_value()
                    ? json(*report.mediator.stationary_fraction)
                    : json(nullptr);
  j["x_star"] = report.mediator.x_star;
  j["p"] = report.mediator.p;
  j["med"] = report.mediator.per_capita_cost;
  j["mv"] = report.mv;
  j["ev"] = finite_or_inf(report.ev);
  j["degenerate"] = report.mediator.degenerate;
  j["mediator_dist"] = report.mediator.dist.has_value()
                           ? json(*report.mediator.dist)
                           : json(nullptr);
  return j;
}

json oracle_solution_to_json(const OracleSolution& sol) {
  json j;
  j["grid_size"] = sol.grid_size;
  j["per_capita_cost"] = sol.per_capita_cost;
  j["support"] = sol.support;
  return j;
}

json oracle_comparison_to_json(const OracleComparison& cmp) {
  json j;
  j["oracle"] = oracle_solution_to_json(cmp.oracle);
  j["analytic_med"] = cmp.analytic_cost;
  j["x_star"] = cmp.x_star;
  j["degenerate"] = cmp.degenerate;
  j["difference"] = cmp.difference;
  j["bound"] = cmp.bound;
  j["within_bound"] = cmp.within_bound;
  j["x_star_on_grid"] = cmp.x_star_on_grid;
  j["exact_match"] = cmp.exact_match;
  j["support_structure_ok"] = cmp.support_structure_ok;
  j["support_distance"] = cmp.support_distance;
  return j;
}

json stats_to_json(const SimulationStats& stats) {
  json j;
  j["params"] = stats.params;
  j["dist"] = stats.dist;
  j["config"] = json{{"n", stats.config.n},
                     {"rounds", stats.config.rounds},
                     {"seed", stats.config.seed}};
  j["rng"] = stats.rng_algorithm;
  j["mean_per_capita_cost"] = stats.mean_per_capita_cost;
  j["se_per_capita_cost"] = stats.se_per_capita_cost;
  j["rounds_go"] = stats.rounds_go;
  j["rounds_stay"] = stats.rounds_stay;
  auto opt_field = [](const std::optional<double>& v) {
    return v.has_value() ? json(*v) : json(nullptr);
  };
  j["tagged_go_cost_mean"] = opt_field(stats.tagged_go_cost_mean);
  j["tagged_go_cost_se"] = opt_field(stats.tagged_go_cost_se);
  j["tagged_stay_hypothetical_go_mean"] =
      opt_field(stats.tagged_stay_hypothetical_go_mean);
  j["tagged_stay_hypothetical_go_se"] =
      opt_field(stats.tagged_stay_hypothetical_go_se);
  return j;
}

json verdict_to_json(const IncentiveVerdict& verdict) {
  json j;
  j["pass"] = verdict.pass;
  j["go_side_pass"] = verdict.go_side_pass;
  j["stay_side_pass"] = verdict.stay_side_pass;
  j["z"] = verdict.z;
  return j;
}

}  // namespace elfarol
