#pragma once

// Experiment runners. Each run is a deterministic function of its config:
// trial i draws from its own generator seeded with trial_seed(config.seed, i),
// and aggregation walks the trials in index order, so the report does not
// depend on the number of worker threads.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fatpivot/core.hpp"
#include "fatpivot/random.hpp"

namespace fatpivot::harness {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "fatpivot-report/1";

enum class Experiment { Equiv, Cost, Height, Degeneracy, Exact, Bounds };
enum class OutputFormat { Json, Csv };

const char* to_string(Experiment e) noexcept;
Experiment parse_experiment(std::string_view name);

struct Tolerances {
  double cost_relative = 0.02;      ///< |mean/n - DP| <= this * DP
  double identity_residual = 1e-10;
  double dp_closed_form = 1e-9;
  double sigma = 5.0;               ///< z threshold for Monte-Carlo checks
  double height_factor = 13.0;      ///< height bound factor * ln n
};

struct ExperimentConfig {
  Experiment experiment = Experiment::Cost;
  std::string distribution = "uniform:8";
  std::uint64_t n = 1000;
  int k = 1;
  std::uint64_t trials = 100;
  Seed seed = 0;
  double nu = 0.8;                  ///< degeneracy prefix exponent
  std::size_t max_u = 4;            ///< exact: largest universe enumerated
  std::vector<double> eps_grid{0.01, 0.02, 0.05, 0.1};  ///< bounds
  OutputFormat format = OutputFormat::Json;
  unsigned workers = 1;             ///< 0 = hardware concurrency; not echoed
  Tolerances tolerances;
};

/// ValidationError on any invalid parameter.
void validate(const ExperimentConfig& config);
Json config_to_json(const ExperimentConfig& config);

struct Verdict {
  std::string name;
  bool passed;
  double observed;
  std::string relation;  ///< "<=", ">=" or "=="
  double threshold;
  std::string detail;
};

struct TrialRecord {
  std::uint64_t trial;
  std::uint64_t n;
  int k;
  std::size_t u;
  std::uint64_t partition_cmps;
  std::uint64_t median_cmps;
  std::uint64_t insertionsort_cmps;
  std::uint64_t steps;
  std::uint64_t tree_height;
  Seed seed;
};

struct ExperimentReport {
  ExperimentConfig config;
  Json statistics = Json::object();
  Json references = Json::object();
  std::vector<Verdict> verdicts;
  std::vector<TrialRecord> trials;

  bool passed() const;
  /// Config echo, statistics, references and verdicts; field order fixed.
  Json to_json() const;
  /// Columns: trial,n,k,u,partition_cmps,median_cmps,insertionsort_cmps,steps,tree_height,seed
  std::string to_csv() const;
};

struct Summary {
  double mean = 0.0;
  double standard_error = 0.0;  ///< sample stddev / sqrt(count)
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};
Summary summarize(const std::vector<double>& xs);
Json to_json(const Summary& s);

struct EquivalenceCheck {
  bool shapes_match;
  bool events_match;
  std::string quicksort_digest;
  std::string tree_digest;
  bool ok() const { return shapes_match && events_match; }
};

/// Runs quicksort_k and successive fringe-tree insertion on seq and compares
/// the tree shapes and the multisets of logged comparisons.
EquivalenceCheck check_equivalence(const InputSequence& seq, SampleParams params, std::size_t u);

ExperimentReport run_equivalence(const ExperimentConfig& config);
ExperimentReport run_cost(const ExperimentConfig& config);
ExperimentReport run_height(const ExperimentConfig& config);
ExperimentReport run_degeneracy(const ExperimentConfig& config);
ExperimentReport run_exact(const ExperimentConfig& config);
ExperimentReport run_bounds(const ExperimentConfig& config);
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Human-readable summary of a stored JSON report.
std::string render_text(const Json& report);
/// True iff every verdict in a stored report passed.
bool report_passed(const Json& report);

}  // namespace fatpivot::harness
