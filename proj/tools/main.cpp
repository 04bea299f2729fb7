#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elfarol/analytic.hpp"
#include "elfarol/ce_oracle.hpp"
#include "elfarol/game.hpp"
#include "elfarol/json_io.hpp"
#include "elfarol/simulate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGateFailed = 1;
constexpr int kExitUsage = 2;

struct AnalyzeOpts {
  double c = 0.0, s1 = 0.0, s2 = 0.0;
  std::optional<double> stay_cost;
};

struct OracleOpts {
  double c = 0.0, s1 = 0.0, s2 = 0.0;
  int grid = 201;
  double tol = 1e-9;
};

struct SimulateOpts {
  double c = 0.0, s1 = 0.0, s2 = 0.0;
  bool optimal = false;
  std::string dist_path;
  long long n = 100000;
  long long rounds = 20000;
  std::uint64_t seed = 1;
  std::string trace_path;
};

struct SweepOpts {
  std::string vary;
  std::string family;
  double from = 0.0, to = 0.0;
  int steps = 0;
  std::optional<double> c, s1, s2;
  std::string out_path;
};

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int run_analyze(const AnalyzeOpts& opts) {
  elfarol::json out;
  elfarol::GameParams params;
  if (opts.stay_cost.has_value()) {
    elfarol::RawGameParams raw{opts.c, opts.s1, opts.s2, *opts.stay_cost};
    params = elfarol::normalize(raw);
    out["raw_params"] = elfarol::json{{"c", raw.c},
                                      {"s1", raw.s1},
                                      {"s2", raw.s2},
                                      {"stay_cost", raw.stay_cost}};
  } else {
    params = elfarol::GameParams{opts.c, opts.s1, opts.s2};
  }
  const elfarol::EquilibriumReport report = elfarol::analyze(params);
  elfarol::json body = elfarol::report_to_json(report);
  if (out.contains("raw_params")) {
    body["raw_params"] = out["raw_params"];
  }
  std::cout << body.dump(2) << "\n";
  return kExitOk;
}

int run_oracle(const OracleOpts& opts) {
  const elfarol::GameParams params{opts.c, opts.s1, opts.s2};
  const elfarol::OracleComparison cmp =
      elfarol::compare_with_closed_form(params, opts.grid);
  std::cout << elfarol::oracle_comparison_to_json(cmp).dump(2) << "\n";
  if (!cmp.within_bound) return kExitGateFailed;
  if (cmp.x_star_on_grid && cmp.difference > opts.tol) return kExitGateFailed;
  return kExitOk;
}

int run_simulate(const SimulateOpts& opts) {
  const elfarol::GameParams params{opts.c, opts.s1, opts.s2};
  elfarol::require_valid(params);

  elfarol::ConfigDistribution dist;
  if (opts.optimal) {
    const elfarol::MediatorReport med = elfarol::best_mediator(params);
    if (med.degenerate) {
      std::cerr << "best mediator is degenerate (single configuration); "
                   "use `analyze` for the equilibrium report\n";
      return kExitUsage;
    }
    dist = *med.dist;
  } else {
    std::ifstream in(opts.dist_path);
    if (!in) {
      std::cerr << "cannot read distribution file: " << opts.dist_path << "\n";
      return kExitUsage;
    }
    elfarol::json j;
    in >> j;
    dist = j.get<elfarol::ConfigDistribution>();
  }
  const elfarol::ValidationResult check = elfarol::validate_distribution(dist);
  if (!check.ok()) {
    std::cerr << "invalid distribution: " << *check.violation << "\n";
    return kExitUsage;
  }

  std::ofstream trace_file;
  std::ostream* trace = nullptr;
  if (!opts.trace_path.empty()) {
    trace_file.open(opts.trace_path);
    if (!trace_file) {
      std::cerr << "cannot open trace file: " << opts.trace_path << "\n";
      return kExitUsage;
    }
    trace_file << "round,x,g,cost,tagged_advice\n";
    trace = &trace_file;
  }

  const elfarol::SimConfig config{opts.n, opts.rounds, opts.seed};
  const elfarol::SimulationStats stats =
      elfarol::run_simulation(params, dist, config, trace);
  const elfarol::IncentiveVerdict verdict =
      elfarol::check_incentives(params, dist, stats, 3.0);

  elfarol::json out;
  out["stats"] = elfarol::stats_to_json(stats);
  out["incentives"] = elfarol::verdict_to_json(verdict);
  std::cout << out.dump(2) << "\n";
  return verdict.pass ? kExitOk : kExitGateFailed;
}

int run_sweep(const SweepOpts& opts) {
  const bool family_mode = !opts.family.empty();
  if (family_mode == !opts.vary.empty()) {
    std::cerr << "exactly one of --vary and --family is required\n";
    return kExitUsage;
  }
  if (opts.steps < 2) {
    std::cerr << "sweep needs at least 2 steps\n";
    return kExitUsage;
  }
  if (opts.from == opts.to) {
    std::cerr << "sweep endpoints must differ\n";
    return kExitUsage;
  }

  // Row values: linear for parameter sweeps, logarithmic for the epsilon
  // families where the divergence only shows near zero.
  std::vector<double> values(static_cast<std::size_t>(opts.steps));
  for (int i = 0; i < opts.steps; ++i) {
    const double t = static_cast<double>(i) / (opts.steps - 1);
    if (family_mode) {
      if (!(opts.from > 0.0 && opts.to > 0.0)) {
        std::cerr << "family epsilons must be positive\n";
        return kExitUsage;
      }
      values[static_cast<std::size_t>(i)] =
          opts.from * std::pow(opts.to / opts.from, t);
    } else {
      values[static_cast<std::size_t>(i)] = opts.from + (opts.to - opts.from) * t;
    }
  }

  std::vector<elfarol::GameParams> rows;
  rows.reserve(values.size());
  for (double v : values) {
    elfarol::GameParams params;
    if (family_mode) {
      const elfarol::FamilyKind kind = opts.family == "unbounded-mv"
                                           ? elfarol::FamilyKind::unbounded_mv
                                           : elfarol::FamilyKind::unbounded_ev;
      params = elfarol::make_family(kind, v);
    } else {
      auto need = [](const std::optional<double>& f, const char* name) {
        if (!f.has_value()) {
          throw std::invalid_argument(std::string("missing fixed parameter --") +
                                      name);
        }
        return *f;
      };
      if (opts.vary == "c") {
        params = {v, need(opts.s1, "s1"), need(opts.s2, "s2")};
      } else if (opts.vary == "s1") {
        params = {need(opts.c, "c"), v, need(opts.s2, "s2")};
      } else {
        params = {need(opts.c, "c"), need(opts.s1, "s1"), v};
      }
    }
    elfarol::require_valid(params);  // reject the whole sweep up front
    rows.push_back(params);
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!opts.out_path.empty()) {
    file.open(opts.out_path);
    if (!file) {
      std::cerr << "cannot open output file: " << opts.out_path << "\n";
      return kExitUsage;
    }
    out = &file;
  }

  *out << "param_value,ne,med,opt,mv,ev,x_star,p,y_star,degenerate\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const elfarol::EquilibriumReport r = elfarol::analyze(rows[i]);
    *out << format_value(values[i]) << ',' << format_value(r.nash.per_capita_cost)
         << ',' << format_value(r.mediator.per_capita_cost) << ','
         << format_value(r.opt_cost) << ',' << format_value(r.mv) << ','
         << format_value(r.ev) << ',' << format_value(r.mediator.x_star) << ','
         << format_value(r.mediator.p) << ',' << format_value(r.y_star) << ','
         << (r.mediator.degenerate ? 1 : 0) << '\n';
  }
  if (!opts.out_path.empty() && !file.good()) {
    std::cerr << "failed writing output file: " << opts.out_path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best-mediator analysis for the extended attendance game"};
  app.require_subcommand(1);

  AnalyzeOpts analyze_opts;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Closed-form equilibrium report for one parameter set");
  analyze->add_option("--c", analyze_opts.c, "Cost-to-go intercept")->required();
  analyze->add_option("--s1", analyze_opts.s1, "Descending slope")->required();
  analyze->add_option("--s2", analyze_opts.s2, "Ascending slope")->required();
  analyze->add_option("--stay-cost", analyze_opts.stay_cost,
                      "Raw cost to stay; parameters are normalized by it");

  OracleOpts oracle_opts;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Compare the closed form against the grid enumeration oracle");
  oracle->add_option("--c", oracle_opts.c, "Cost-to-go intercept")->required();
  oracle->add_option("--s1", oracle_opts.s1, "Descending slope")->required();
  oracle->add_option("--s2", oracle_opts.s2, "Ascending slope")->required();
  oracle->add_option("--grid", oracle_opts.grid, "Grid size (>= 2)");
  oracle->add_option("--tol", oracle_opts.tol,
                     "Exactness gate when x_star lies on the grid");

  SimulateOpts sim_opts;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo run of mediated play with incentive checks");
  simulate->add_option("--c", sim_opts.c, "Cost-to-go intercept")->required();
  simulate->add_option("--s1", sim_opts.s1, "Descending slope")->required();
  simulate->add_option("--s2", sim_opts.s2, "Ascending slope")->required();
  CLI::Option* opt_flag = simulate->add_flag(
      "--optimal", sim_opts.optimal, "Simulate the closed-form best mediator");
  simulate->add_option("--dist", sim_opts.dist_path,
                       "JSON file with the configuration distribution")
      ->excludes(opt_flag);
  simulate->add_option("--n", sim_opts.n, "Player count");
  simulate->add_option("--rounds", sim_opts.rounds, "Round count");
  simulate->add_option("--seed", sim_opts.seed, "RNG seed");
  simulate->add_option("--trace", sim_opts.trace_path,
                       "Write a per-round CSV trace to this path");

  SweepOpts sweep_opts;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Emit a CSV of equilibrium values along a parameter sweep");
  sweep->add_option("--vary", sweep_opts.vary, "Parameter to vary")
      ->check(CLI::IsMember({"c", "s1", "s2"}));
  sweep->add_option("--family", sweep_opts.family,
                    "Epsilon family sweep (log-spaced)")
      ->check(CLI::IsMember({"unbounded-mv", "unbounded-ev"}));
  sweep->add_option("--from", sweep_opts.from, "First value")->required();
  sweep->add_option("--to", sweep_opts.to, "Last value")->required();
  sweep->add_option("--steps", sweep_opts.steps, "Number of rows")->required();
  sweep->add_option("--c", sweep_opts.c, "Fixed c");
  sweep->add_option("--s1", sweep_opts.s1, "Fixed s1");
  sweep->add_option("--s2", sweep_opts.s2, "Fixed s2");
  sweep->add_option("--out", sweep_opts.out_path, "Output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_opts);
    if (oracle->parsed()) return run_oracle(oracle_opts);
    if (simulate->parsed()) {
      if (!sim_opts.optimal && sim_opts.dist_path.empty()) {
        std::cerr << "one of --optimal and --dist is required\n";
        return kExitUsage;
      }
      return run_simulate(sim_opts);
    }
    if (sweep->parsed()) return run_sweep(sweep_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
