#include "fatpivot/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "fatpivot/analysis.hpp"
#include "fatpivot/fringe_tree.hpp"
#include "fatpivot/inputgen.hpp"
#include "fatpivot/quicksort.hpp"

namespace fatpivot::harness {

namespace a = fatpivot::analysis;

const char* to_string(Experiment e) noexcept {
  switch (e) {
    case Experiment::Equiv: return "equiv";
    case Experiment::Cost: return "cost";
    case Experiment::Height: return "height";
    case Experiment::Degeneracy: return "degeneracy";
    case Experiment::Exact: return "exact";
    case Experiment::Bounds: return "bounds";
  }
  return "?";
}

Experiment parse_experiment(std::string_view name) {
  for (Experiment e : {Experiment::Equiv, Experiment::Cost, Experiment::Height, Experiment::Degeneracy,
                       Experiment::Exact, Experiment::Bounds})
    if (name == to_string(e)) return e;
  throw ValidationError("unknown experiment '" + std::string(name) + "'");
}

void validate(const ExperimentConfig& c) {
  SampleParams::from_k(c.k);
  parse_distribution_spec(c.distribution);
  if (c.trials < 1) throw ValidationError("trials must be >= 1");
  if (c.n < 1) throw ValidationError("n must be >= 1");
  if (c.experiment == Experiment::Degeneracy && !(c.nu >= 0.0 && c.nu < 1.0))
    throw ValidationError("nu must lie in [0,1)");
  if (c.experiment == Experiment::Exact &&
      (c.n > a::kBruteForceMaxN || c.max_u > a::kBruteForceMaxU || c.max_u < 1))
    throw SizeError("exact: n <= 9 and 1 <= u <= 4 required");
  if (c.experiment == Experiment::Bounds && c.eps_grid.empty())
    throw ValidationError("bounds: empty eps grid");
}

Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["experiment"] = to_string(c.experiment);
  j["distribution"] = c.distribution;
  j["n"] = c.n;
  j["k"] = c.k;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  if (c.experiment == Experiment::Degeneracy) j["nu"] = c.nu;
  if (c.experiment == Experiment::Exact) j["max_u"] = c.max_u;
  if (c.experiment == Experiment::Bounds) j["eps_grid"] = c.eps_grid;
  j["format"] = c.format == OutputFormat::Json ? "json" : "csv";
  j["tolerances"] = {{"cost_relative", c.tolerances.cost_relative},
                     {"identity_residual", c.tolerances.identity_residual},
                     {"dp_closed_form", c.tolerances.dp_closed_form},
                     {"sigma", c.tolerances.sigma},
                     {"height_factor", c.tolerances.height_factor}};
  return j;
}

bool ExperimentReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

Json ExperimentReport::to_json() const {
  Json j;
  j["schema"] = kSchemaVersion;
  j["config"] = config_to_json(config);
  j["statistics"] = statistics;
  j["references"] = references;
  Json vs = Json::array();
  for (const Verdict& v : verdicts)
    vs.push_back({{"name", v.name},
                  {"passed", v.passed},
                  {"observed", v.observed},
                  {"relation", v.relation},
                  {"threshold", v.threshold},
                  {"detail", v.detail}});
  j["verdicts"] = vs;
  j["passed"] = passed();
  return j;
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "trial,n,k,u,partition_cmps,median_cmps,insertionsort_cmps,steps,tree_height,seed\n";
  for (const TrialRecord& r : trials)
    out << r.trial << ',' << r.n << ',' << r.k << ',' << r.u << ',' << r.partition_cmps << ','
        << r.median_cmps << ',' << r.insertionsort_cmps << ',' << r.steps << ',' << r.tree_height << ','
        << r.seed << '\n';
  return out.str();
}

Summary summarize(const std::vector<double>& xs) {
  Summary s;
  s.count = xs.size();
  if (xs.empty()) return s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    s.standard_error = std::sqrt(var / static_cast<double>(xs.size()));
  }
  return s;
}

Json to_json(const Summary& s) {
  return {{"mean", s.mean}, {"standard_error", s.standard_error}, {"min", s.min}, {"max", s.max}};
}

namespace {

// Runs fn(i) for i in [0, count); worker w takes i = w, w + W, ...
template <class Fn>
void for_each_trial(std::uint64_t count, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Verdict make_verdict(std::string name, double observed, std::string relation, double threshold,
                     std::string detail = {}) {
  bool ok = false;
  if (relation == "<=") ok = observed <= threshold;
  else if (relation == ">=") ok = observed >= threshold;
  else ok = observed == threshold;
  return {std::move(name), ok, observed, std::move(relation), threshold, std::move(detail)};
}

TrialRecord record_from(std::uint64_t trial, const ExperimentConfig& c, std::size_t u,
                        const ComparisonLedger& l, std::uint64_t height, Seed seed) {
  return {trial, c.n, c.k, u, l.partition_cmps, l.median_cmps, l.insertionsort_cmps, l.steps, height, seed};
}

Json ledger_statistics(const std::vector<TrialRecord>& rows) {
  const auto column = [&](auto member) {
    std::vector<double> xs;
    xs.reserve(rows.size());
    for (const TrialRecord& r : rows) xs.push_back(static_cast<double>(member(r)));
    return summarize(xs);
  };
  Json j;
  j["partition_cmps"] = to_json(column([](const TrialRecord& r) { return r.partition_cmps; }));
  j["median_cmps"] = to_json(column([](const TrialRecord& r) { return r.median_cmps; }));
  j["insertionsort_cmps"] = to_json(column([](const TrialRecord& r) { return r.insertionsort_cmps; }));
  j["steps"] = to_json(column([](const TrialRecord& r) { return r.steps; }));
  j["total_cmps"] = to_json(column([](const TrialRecord& r) {
    return r.partition_cmps + r.median_cmps + r.insertionsort_cmps;
  }));
  j["tree_height"] = to_json(column([](const TrialRecord& r) { return r.tree_height; }));
  return j;
}

std::string echo_values(const InputSequence& seq) {
  std::string s;
  for (const Element& e : seq.elements()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.value);
  }
  return s;
}

}  // namespace

EquivalenceCheck check_equivalence(const InputSequence& seq, SampleParams params, std::size_t u) {
  const SortOutcome sorted = quicksort_k(seq, params);
  const FringeTree tree = build_fringe_tree(seq, params, u);
  EquivalenceCheck c;
  c.quicksort_digest = sorted.tree.shape_digest();
  c.tree_digest = tree.shape_digest();
  c.shapes_match = c.quicksort_digest == c.tree_digest;
  c.events_match = sorted.ledger.sorted_events() == tree.ledger().sorted_events();
  return c;
}

ExperimentReport run_equivalence(const ExperimentConfig& config) {
  validate(config);
  const UniverseDistribution q = parse_distribution_spec(config.distribution);
  const SampleParams params = SampleParams::from_k(config.k);
  ExperimentReport report;
  report.config = config;

  std::vector<char> ok(config.trials, 0);
  report.trials.resize(config.trials);
  for_each_trial(config.trials, config.workers, [&](std::uint64_t i) {
    const Seed s = trial_seed(config.seed, i);
    const InputSequence seq = sample_iid(q, config.n, s);
    ok[i] = check_equivalence(seq, params, q.size()).ok();
    const SortOutcome out = quicksort_k(seq, params, {.record_events = false});
    report.trials[i] = record_from(i, config, q.size(), out.ledger, out.tree.height(), s);
  });

  std::uint64_t matches = 0;
  Json mismatches = Json::array();
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    if (ok[i]) {
      ++matches;
    } else if (mismatches.size() < 5) {
      const Seed s = trial_seed(config.seed, i);
      const EquivalenceCheck c = check_equivalence(sample_iid(q, config.n, s), params, q.size());
      mismatches.push_back({{"trial", i},
                            {"seed", s},
                            {"input", echo_values(sample_iid(q, config.n, s))},
                            {"shapes_match", c.shapes_match},
                            {"events_match", c.events_match}});
    }
  }
  const double rate = static_cast<double>(matches) / static_cast<double>(config.trials);
  report.statistics["matches"] = matches;
  report.statistics["match_rate"] = rate;
  report.statistics["ledger"] = ledger_statistics(report.trials);
  report.references["mismatches"] = mismatches;
  report.verdicts.push_back(make_verdict("recursion_tree_equivalence", rate, "==", 1.0,
                                         "shape digest and comparison-event multiset equal in every trial"));
  return report;
}

ExperimentReport run_cost(const ExperimentConfig& config) {
  validate(config);
  const UniverseDistribution q = parse_distribution_spec(config.distribution);
  const SampleParams params = SampleParams::from_k(config.k);
  ExperimentReport report;
  report.config = config;
  report.trials.resize(config.trials);

  for_each_trial(config.trials, config.workers, [&](std::uint64_t i) {
    const Seed s = trial_seed(config.seed, i);
    const SortOutcome out = quicksort_k(sample_iid(q, config.n, s), params, {.record_events = false});
    report.trials[i] = record_from(i, config, q.size(), out.ledger, out.tree.height(), s);
  });

  const auto n = static_cast<double>(config.n);
  std::vector<double> per_n;
  per_n.reserve(report.trials.size());
  for (const TrialRecord& r : report.trials) per_n.push_back(static_cast<double>(r.partition_cmps) / n);
  const Summary rate = summarize(per_n);
  report.statistics["ledger"] = ledger_statistics(report.trials);
  report.statistics["partition_cmps_per_n"] = to_json(rate);

  const double dp = a::expected_search_cost_dp(q, params);
  const double h_ld = a::entropy(q, a::LogBase::Two);
  const double lower = a::sorting_lower_bound(q, config.n);
  const double slack = (median_cost_constant(params) + 2.0) * params.k() * static_cast<double>(q.size()) / n;
  report.references["expected_search_cost_dp"] = dp;
  report.references["entropy_ld"] = h_ld;
  report.references["alpha_k"] = a::alpha_k(params.k());
  report.references["alpha_k_times_entropy"] = a::alpha_k(params.k()) * h_ld;
  report.references["lower_bound_total"] = lower;
  report.references["lower_bound_per_n"] = lower / n;
  report.references["search_cost_slack_per_n"] = slack;
  report.statistics["deviation_in_standard_errors"] =
      rate.standard_error > 0 ? std::abs(rate.mean - dp) / rate.standard_error : 0.0;

  double total_sum = 0.0;
  for (const TrialRecord& r : report.trials)
    total_sum += static_cast<double>(r.partition_cmps + r.median_cmps + r.insertionsort_cmps);
  const double mean_total = total_sum / static_cast<double>(report.trials.size());

  report.verdicts.push_back(make_verdict("cost_matches_search_cost_dp", std::abs(rate.mean - dp) / dp, "<=",
                                         config.tolerances.cost_relative,
                                         "relative deviation of mean partition_cmps/n from E[A_q]"));
  report.verdicts.push_back(make_verdict("cost_above_lower_bound", mean_total, ">=", lower,
                                         "mean total comparisons vs H_ld(q) n - n/ln 2"));
  return report;
}

ExperimentReport run_height(const ExperimentConfig& config) {
  validate(config);
  const UniverseDistribution q = parse_distribution_spec(config.distribution);
  const SampleParams params = SampleParams::from_k(config.k);
  ExperimentReport report;
  report.config = config;
  report.trials.resize(config.trials);

  for_each_trial(config.trials, config.workers, [&](std::uint64_t i) {
    const Seed s = trial_seed(config.seed, i);
    const FringeTree tree = build_fringe_tree(sample_iid(q, config.n, s), params, q.size(), false);
    report.trials[i] = record_from(i, config, q.size(), tree.ledger(), tree.height(), s);
  });

  const double limit = config.tolerances.height_factor * std::log(static_cast<double>(config.n));
  std::uint64_t exceed = 0;
  std::uint64_t max_height = 0;
  for (const TrialRecord& r : report.trials) {
    max_height = std::max(max_height, r.tree_height);
    if (static_cast<double>(r.tree_height) > limit) ++exceed;
  }
  report.statistics["ledger"] = ledger_statistics(report.trials);
  report.statistics["max_height"] = max_height;
  report.statistics["trees_above_limit"] = exceed;
  report.references["height_limit"] = limit;
  report.verdicts.push_back(make_verdict("height_within_log_bound", static_cast<double>(exceed), "==", 0.0,
                                         "trees with height > factor * ln n"));
  return report;
}

ExperimentReport run_degeneracy(const ExperimentConfig& config) {
  validate(config);
  const UniverseDistribution q = parse_distribution_spec(config.distribution);
  ExperimentReport report;
  report.config = config;
  report.trials.resize(config.trials);
  const DegeneracyParams dp{config.nu, config.k};
  const std::size_t n_t = dp.prefix_length(config.n);

  std::vector<char> degenerate(config.trials, 0);
  for_each_trial(config.trials, config.workers, [&](std::uint64_t i) {
    const Seed s = trial_seed(config.seed, i);
    degenerate[i] = is_profile_degenerate(sample_iid(q, config.n, s), dp, q.size());
    report.trials[i] = record_from(i, config, q.size(), ComparisonLedger{}, 0, s);
  });

  const auto count = static_cast<std::uint64_t>(std::count(degenerate.begin(), degenerate.end(), 1));
  const double freq = static_cast<double>(count) / static_cast<double>(config.trials);
  Json tails = Json::array();
  double union_bound = 0.0;
  for (double w : q.weights()) {
    const double tail = a::binomial_lower_tail(n_t, w, static_cast<std::uint64_t>(config.k));
    tails.push_back(tail);
    union_bound += tail;
  }
  const double capped = std::min(union_bound, 1.0);
  const double slack =
      config.tolerances.sigma * std::sqrt(capped * (1.0 - capped) / static_cast<double>(config.trials)) +
      1e-12;
  report.statistics["degenerate_count"] = count;
  report.statistics["frequency"] = freq;
  report.references["prefix_length"] = n_t;
  report.references["pigeonhole"] = n_t < static_cast<std::size_t>(config.k) * q.size();
  report.references["per_value_binomial_tail"] = tails;
  report.references["union_bound"] = union_bound;
  report.verdicts.push_back(make_verdict("frequency_within_union_bound", freq, "<=", capped + slack,
                                         "empirical degeneracy frequency vs min(1, union bound) + sigma slack"));
  return report;
}

namespace {

// All profiles with every multiplicity >= 1, 1 <= u <= max_u and total <= max_n.
std::vector<Profile> small_profiles(std::uint64_t max_n, std::size_t max_u) {
  std::vector<Profile> out;
  for (std::size_t u = 1; u <= max_u; ++u) {
    std::vector<std::uint64_t> x(u, 1);
    if (u > max_n) break;
    while (true) {
      out.emplace_back(x);
      // next composition in lexicographic order with total <= max_n
      std::uint64_t total = 0;
      for (auto c : x) total += c;
      std::size_t i = u;
      while (i > 0) {
        --i;
        if (total < max_n) {
          ++x[i];
          break;
        }
        total -= x[i] - 1;
        x[i] = 1;
        if (i == 0) {
          i = u + 1;  // exhausted
          break;
        }
      }
      if (i == u + 1) break;
    }
  }
  return out;
}

}  // namespace

ExperimentReport run_exact(const ExperimentConfig& config) {
  validate(config);
  const SampleParams params = SampleParams::from_k(config.k);
  ExperimentReport report;
  report.config = config;
  const std::vector<Profile> profiles = small_profiles(config.n, config.max_u);

  struct Row {
    bool equal;
    double z;
    double mc_mean;
  };
  std::vector<Row> rows(profiles.size());
  for_each_trial(profiles.size(), config.workers, [&](std::uint64_t p) {
    const Profile& x = profiles[p];
    const a::Rational brute = a::brute_force_expected_cost(x, params, a::CostConvention::Sedgewick);
    const a::Rational closed = a::sedgewick_exact_multiset_rational(x);
    const Seed base = trial_seed(config.seed, p);
    std::vector<double> samples;
    samples.reserve(config.trials);
    for (std::uint64_t i = 0; i < config.trials; ++i) {
      const SortOutcome out =
          quicksort_k(shuffle_multiset(x, trial_seed(base, i)), params, {.record_events = false});
      samples.push_back(static_cast<double>(sedgewick_count(out.ledger)));
    }
    const Summary s = summarize(samples);
    const double diff = std::abs(s.mean - a::to_double(brute));
    const double z = s.standard_error > 0 ? diff / s.standard_error : (diff < 1e-9 ? 0.0 : HUGE_VAL);
    rows[p] = {brute == closed, z, s.mean};
  });

  std::uint64_t mismatches = 0;
  double max_z = 0.0;
  Json listing = Json::array();
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    if (!rows[p].equal) ++mismatches;
    max_z = std::max(max_z, rows[p].z);
    const a::Rational brute = a::brute_force_expected_cost(profiles[p], params, a::CostConvention::Sedgewick);
    listing.push_back({{"profile", std::vector<std::uint64_t>(profiles[p].counts().begin(),
                                                              profiles[p].counts().end())},
                       {"brute_force", std::to_string(brute.numerator()) + "/" +
                                           std::to_string(brute.denominator())},
                       {"closed_form_equal", rows[p].equal},
                       {"monte_carlo_mean", rows[p].mc_mean},
                       {"monte_carlo_z", rows[p].z}});
  }
  report.statistics["profiles_checked"] = profiles.size();
  report.statistics["exact_mismatches"] = mismatches;
  report.statistics["max_monte_carlo_z"] = max_z;
  report.references["profiles"] = listing;
  if (params.k() == 1) {
    report.verdicts.push_back(make_verdict("sedgewick_formula_exact", static_cast<double>(mismatches), "==", 0.0,
                                           "brute-force average equals 2Q(x)+n-u as rationals"));
  }
  report.verdicts.push_back(make_verdict("monte_carlo_consistent", max_z, "<=", config.tolerances.sigma,
                                         "largest |MC mean - exact| in standard errors"));
  return report;
}

ExperimentReport run_bounds(const ExperimentConfig& config) {
  validate(config);
  const UniverseDistribution q = parse_distribution_spec(config.distribution);
  const SampleParams params = SampleParams::from_k(config.k);
  ExperimentReport report;
  report.config = config;
  const double dp = a::expected_search_cost_dp(q, params);
  const double h_ln = a::entropy(q, a::LogBase::E);
  std::uint64_t violations = 0;
  std::uint64_t checked = 0;
  Json rows = Json::array();
  for (double eps : config.eps_grid) {
    const a::BoundConstants up = a::bound_constants(a::BoundKind::Upper, params, eps);
    const a::BoundConstants lo = a::bound_constants(a::BoundKind::Lower, params, eps);
    Json row{{"eps", eps}};
    if (up.valid) {
      const double bound = up.c * h_ln + up.d;
      ++checked;
      if (dp > bound) ++violations;
      row["upper"] = {{"c", up.c}, {"d", up.d}, {"bound", bound}};
    } else {
      row["upper"] = {{"invalid", up.diagnostic}};
    }
    if (lo.valid) {
      const double bound = lo.c * h_ln - lo.d;
      ++checked;
      if (dp < bound) ++violations;
      row["lower"] = {{"c", lo.c}, {"d", lo.d}, {"bound", bound}};
    } else {
      row["lower"] = {{"invalid", lo.diagnostic}};
    }
    rows.push_back(row);
  }
  report.statistics["bounds_checked"] = checked;
  report.statistics["violations"] = violations;
  report.references["expected_search_cost_dp"] = dp;
  report.references["entropy_ln"] = h_ln;
  report.references["grid"] = rows;
  report.verdicts.push_back(make_verdict("entropy_sandwich", static_cast<double>(violations), "==", 0.0,
                                         "c_lower H_ln - d_lower <= E[A_q] <= c_upper H_ln + d_upper"));
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  switch (config.experiment) {
    case Experiment::Equiv: return run_equivalence(config);
    case Experiment::Cost: return run_cost(config);
    case Experiment::Height: return run_height(config);
    case Experiment::Degeneracy: return run_degeneracy(config);
    case Experiment::Exact: return run_exact(config);
    case Experiment::Bounds: return run_bounds(config);
  }
  throw ValidationError("unknown experiment");
}

bool report_passed(const Json& report) {
  if (!report.contains("verdicts") || !report["verdicts"].is_array())
    throw ValidationError("report: missing verdicts array");
  for (const auto& v : report["verdicts"])
    if (!v.value("passed", false)) return false;
  return true;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  const Json& cfg = report.at("config");
  out << "experiment " << cfg.value("experiment", "?") << "  dist=" << cfg.value("distribution", "?")
      << "  n=" << cfg.value("n", 0) << "  k=" << cfg.value("k", 0) << "  trials=" << cfg.value("trials", 0)
      << "  seed=" << cfg.value("seed", std::uint64_t{0}) << '\n';
  if (report.contains("references"))
    for (const auto& [key, val] : report["references"].items())
      if (val.is_primitive()) out << "  ref  " << key << " = " << val.dump() << '\n';
  for (const auto& v : report.at("verdicts"))
    out << (v.value("passed", false) ? "  PASS " : "  FAIL ") << v.value("name", "?") << ": "
        << v.at("observed").dump() << ' ' << v.value("relation", "?") << ' ' << v.at("threshold").dump()
        << '\n';
  out << (report_passed(report) ? "all verdicts passed" : "verdict failure") << '\n';
  return out.str();
}

}  // namespace fatpivot::harness
