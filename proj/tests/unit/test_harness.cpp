#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "fatpivot/harness.hpp"

using namespace fatpivot;
using namespace fatpivot::harness;

namespace {

ExperimentConfig config(Experiment e, std::string dist, std::uint64_t n, int k, std::uint64_t trials,
                        Seed seed = 1) {
  ExperimentConfig c;
  c.experiment = e;
  c.distribution = std::move(dist);
  c.n = n;
  c.k = k;
  c.trials = trials;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("summary statistics") {
  const Summary s = summarize({1, 2, 3, 4});
  CHECK(s.mean == 2.5);
  CHECK(s.min == 1);
  CHECK(s.max == 4);
  CHECK(s.count == 4);
  // sample variance 5/3
  CHECK(s.standard_error == doctest::Approx(std::sqrt(5.0 / 3 / 4)));
  CHECK(summarize({7}).standard_error == 0.0);
  CHECK(summarize({}).count == 0);
}

TEST_CASE("experiment names") {
  for (auto e : {Experiment::Equiv, Experiment::Cost, Experiment::Height, Experiment::Degeneracy,
                 Experiment::Exact, Experiment::Bounds})
    CHECK(parse_experiment(to_string(e)) == e);
  CHECK_THROWS_AS(parse_experiment("plot"), ValidationError);
}

TEST_CASE("config validation") {
  auto c = config(Experiment::Cost, "uniform:4", 10, 1, 0);
  CHECK_THROWS_AS(validate(c), ValidationError);
  c.trials = 1;
  c.k = 2;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c.k = 1;
  c.distribution = "nope";
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = config(Experiment::Degeneracy, "uniform:4", 10, 1, 1);
  c.nu = 1.0;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = config(Experiment::Exact, "uniform:2", 10, 1, 1);
  CHECK_THROWS_AS(validate(c), SizeError);
  CHECK_THROWS_AS(run_exact(c), SizeError);
}

TEST_CASE("equivalence experiment") {
  const auto r = run_equivalence(config(Experiment::Equiv, "uniform:5", 50, 3, 100, 7));
  CHECK(r.passed());
  CHECK(r.statistics["match_rate"].get<double>() == 1.0);
  CHECK(r.references["mismatches"].empty());
  CHECK(r.trials.size() == 100);
  const auto ones = run_equivalence(config(Experiment::Equiv, "uniform:1", 30, 5, 5));
  CHECK(ones.passed());
  const auto tiny = run_equivalence(config(Experiment::Equiv, "uniform:3", 4, 5, 5));
  CHECK(tiny.passed());
  CHECK(tiny.trials[0].partition_cmps == 0);
}

TEST_CASE("cost experiment on two values") {
  auto c = config(Experiment::Cost, "uniform:2", 10000, 1, 50, 3);
  const auto r = run_cost(c);
  CHECK(r.passed());
  const auto& s = r.statistics["partition_cmps_per_n"];
  const double mean = s["mean"].get<double>();
  const double se = s["standard_error"].get<double>();
  CHECK(r.references["expected_search_cost_dp"].get<double>() == doctest::Approx(1.5));
  CHECK(std::abs(mean - 1.5) <= 3 * se + 2.0 / 10000);
  // the recorded verdict can be recomputed from the report
  const double dp = r.references["expected_search_cost_dp"].get<double>();
  CHECK(r.verdicts[0].observed == doctest::Approx(std::abs(mean - dp) / dp));
  CHECK(r.verdicts[1].threshold == doctest::Approx(r.references["lower_bound_total"].get<double>()));
  CHECK(r.verdicts[1].observed == doctest::Approx(r.statistics["ledger"]["total_cmps"]["mean"].get<double>()));
}

TEST_CASE("height experiment") {
  const auto one = run_height(config(Experiment::Height, "uniform:1", 500, 1, 20));
  CHECK(one.statistics["max_height"].get<std::uint64_t>() == 1);
  CHECK(one.passed());
  const auto r = run_height(config(Experiment::Height, "uniform:1000", 1000, 3, 50));
  CHECK(r.passed());
  CHECK(r.statistics["trees_above_limit"].get<std::uint64_t>() == 0);
}

TEST_CASE("degeneracy experiment") {
  auto c = config(Experiment::Degeneracy, "uniform:4", 10000, 3, 1000, 9);
  c.nu = 0.8;
  const auto r = run_degeneracy(c);
  CHECK(r.passed());
  CHECK(r.statistics["frequency"].get<double>() == 0.0);
  CHECK(r.references["union_bound"].get<double>() < 1e-6);
  CHECK(r.references["prefix_length"].get<std::uint64_t>() == 1585);

  c.nu = 0.1;  // n_T = 3 < k u = 12
  const auto p = run_degeneracy(c);
  CHECK(p.references["pigeonhole"].get<bool>());
  CHECK(p.statistics["frequency"].get<double>() == 1.0);
  CHECK(p.passed());

  auto one = config(Experiment::Degeneracy, "uniform:1", 100, 3, 10);
  one.nu = 0.2;  // n_T = 3 = k
  CHECK(run_degeneracy(one).statistics["frequency"].get<double>() == 0.0);
  one.nu = 0.1;  // n_T = 2 < k
  CHECK(run_degeneracy(one).statistics["frequency"].get<double>() == 1.0);
}

TEST_CASE("exact experiment") {
  auto c = config(Experiment::Exact, "uniform:1", 7, 1, 200, 2);
  const auto r = run_exact(c);
  CHECK(r.passed());
  CHECK(r.statistics["profiles_checked"].get<std::uint64_t>() == 98);
  CHECK(r.statistics["exact_mismatches"].get<std::uint64_t>() == 0);
  const auto& first = r.references["profiles"][0];
  CHECK(first["brute_force"].get<std::string>() == "0/1");
  CHECK(first["monte_carlo_z"].get<double>() == 0.0);
}

TEST_CASE("bounds experiment") {
  for (int k : {1, 3, 5}) {
    const auto r = run_bounds(config(Experiment::Bounds, "uniform:16", 1, k, 1));
    CHECK(r.passed());
    CHECK(r.statistics["bounds_checked"].get<std::uint64_t>() == 7);
  }
}

TEST_CASE("reports are deterministic and independent of workers") {
  for (Experiment e : {Experiment::Equiv, Experiment::Cost, Experiment::Height, Experiment::Degeneracy}) {
    auto c = config(e, "two:0.3", 400, 3, 16, 99);
    const std::string serial = run_experiment(c).to_json().dump();
    CHECK(run_experiment(c).to_json().dump() == serial);
    c.workers = 4;
    CHECK(run_experiment(c).to_json().dump() == serial);
    c.workers = 1;
    c.seed = 100;
    CHECK(run_experiment(c).to_json().dump() != serial);
  }
}

TEST_CASE("report formats") {
  const auto r = run_cost(config(Experiment::Cost, "uniform:3", 300, 1, 400));
  const Json j = r.to_json();
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["config"]["experiment"] == "cost");
  CHECK(j["config"]["seed"] == 1);
  CHECK_FALSE(j["config"].contains("workers"));
  CHECK(report_passed(j) == r.passed());

  const std::string csv = r.to_csv();
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "trial,n,k,u,partition_cmps,median_cmps,insertionsort_cmps,steps,tree_height,seed");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 400);

  const std::string text = render_text(j);
  CHECK(text.find("PASS cost_matches_search_cost_dp") != std::string::npos);

  Json failed = j;
  failed["verdicts"][0]["passed"] = false;
  CHECK_FALSE(report_passed(failed));
  CHECK(render_text(failed).find("FAIL") != std::string::npos);
  CHECK_THROWS_AS(report_passed(Json::object()), ValidationError);
}
