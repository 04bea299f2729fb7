#include <limits>

#include "doctest.h"
#include "elfarol/analytic.hpp"
#include "elfarol/json_io.hpp"

using namespace elfarol;

TEST_CASE("parameters and distributions round-trip through JSON") {
  const GameParams params{2.0, 4.0, 10.0};
  const json jp = params;
  CHECK(jp.at("c") == 2.0);
  CHECK(jp.at("s1") == 4.0);
  CHECK(jp.at("s2") == 10.0);
  const GameParams back = jp.get<GameParams>();
  CHECK(back.c == params.c);
  CHECK(back.s1 == params.s1);
  CHECK(back.s2 == params.s2);

  const ConfigDistribution dist{{{0.0, 1.0 / 3}, {0.5, 2.0 / 3}}};
  const ConfigDistribution dist_back = json(dist).get<ConfigDistribution>();
  REQUIRE(dist_back.entries.size() == 2);
  CHECK(dist_back.entries[0].x == 0.0);
  CHECK(dist_back.entries[1].p == 2.0 / 3);
}

TEST_CASE("equilibrium report serializes with the stable field names") {
  const json j = report_to_json(analyze(GameParams{2.0, 4.0, 10.0}));
  for (const char* key : {"y_star", "opt", "nash_cost", "lambda", "x_star", "p",
                          "med", "mv", "ev", "degenerate"}) {
    CHECK(j.contains(key));
  }
  CHECK(j.at("mv").get<double>() == doctest::Approx(1.5));
  CHECK(j.at("lambda").is_number());

  const json degenerate = report_to_json(analyze(GameParams{0.5, 1.0, 1.0}));
  CHECK(degenerate.at("lambda").is_null());
  CHECK(degenerate.at("mediator_dist").is_null());
  CHECK(degenerate.at("degenerate") == true);
}

TEST_CASE("an infinite enforcement value is marked explicitly") {
  EquilibriumReport report = analyze(GameParams{2.0, 4.0, 10.0});
  report.ev = std::numeric_limits<double>::infinity();
  const json j = report_to_json(report);
  CHECK(j.at("ev") == "inf");
}
