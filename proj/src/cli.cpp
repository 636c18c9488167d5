#include "fatpivot/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fatpivot/analysis.hpp"
#include "fatpivot/fringe_tree.hpp"
#include "fatpivot/harness.hpp"
#include "fatpivot/inputgen.hpp"
#include "fatpivot/quicksort.hpp"

namespace fatpivot {

namespace {

using harness::Json;
namespace a = analysis;

std::vector<Value> parse_values(std::istream& in) {
  std::vector<Value> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ValidationError("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw ValidationError("not an integer: '" + token + "'");
    if (v < 1 || v > std::numeric_limits<Value>::max())
      throw ValidationError("values must lie in [1, 2^31-1], got " + token);
    values.push_back(static_cast<Value>(v));
  }
  return values;
}

std::vector<Value> read_input(const std::string& path, const std::string& inline_values) {
  if (!path.empty() && !inline_values.empty()) throw ValidationError("give either --input or --values");
  if (!inline_values.empty()) {
    std::istringstream in(inline_values);
    return parse_values(in);
  }
  if (path.empty() || path == "-") return parse_values(std::cin);
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  return parse_values(in);
}

Json ledger_json(const ComparisonLedger& l) {
  return {{"partition_cmps", l.partition_cmps},
          {"median_cmps", l.median_cmps},
          {"insertionsort_cmps", l.insertionsort_cmps},
          {"steps", l.steps},
          {"total", l.total()}};
}

std::string resolve_distribution(const std::string& dist, std::size_t u) {
  if (!dist.empty()) return dist;
  if (u > 0) return "uniform:" + std::to_string(u);
  throw ValidationError("a distribution is required (--dist or --u)");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << text;
}

struct Options {
  std::string input;
  std::string values;
  int k = 1;
  std::size_t u = 0;
  std::string dist;
  double eps = 0.05;
  std::string kind = "both";
  std::uint64_t n = 0;
  double c = 13.0;
  double alpha = 0.0;
  std::string experiment = "cost";
  std::uint64_t trials = 100;
  Seed seed = 0;
  double nu = 0.8;
  unsigned workers = 1;
  std::string out_path;
  std::string csv_path;
  std::string format = "json";
  std::string report_path;
};

int cmd_sort(const Options& o, std::ostream& out) {
  const auto params = SampleParams::from_k(o.k);
  const InputSequence seq = InputSequence::from_values(read_input(o.input, o.values));
  const SortOutcome r = quicksort_k(seq, params, {.record_events = false});
  Json j;
  j["k"] = o.k;
  j["n"] = seq.size();
  j["sorted"] = r.sorted.values();
  Json ledger = ledger_json(r.ledger);
  ledger["sedgewick"] = sedgewick_count(r.ledger);
  j["ledger"] = ledger;
  j["recursion_tree"] = r.tree.shape_digest();
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_tree(const Options& o, std::ostream& out) {
  const auto params = SampleParams::from_k(o.k);
  const InputSequence seq = InputSequence::from_values(read_input(o.input, o.values));
  const std::size_t u = o.u > 0 ? o.u : static_cast<std::size_t>(seq.empty() ? 1 : seq.max_value());
  const FringeTree tree = build_fringe_tree(seq, params, u, false);
  Json j;
  j["k"] = o.k;
  j["u"] = u;
  j["n"] = seq.size();
  j["shape_digest"] = tree.shape_digest();
  j["height"] = tree.height();
  j["saturated"] = tree.saturated();
  j["node_depths"] = tree.saturated() ? Json(tree.node_depths().depths) : Json(nullptr);
  j["ledger"] = ledger_json(tree.ledger());
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_exact(const Options& o, std::ostream& out) {
  const auto params = SampleParams::from_k(o.k);
  const std::string spec = resolve_distribution(o.dist, o.u);
  const UniverseDistribution q = parse_distribution_spec(spec);
  const double h_ld = a::entropy(q, a::LogBase::Two);
  const double dp = a::expected_search_cost_dp(q, params);
  Json j;
  j["distribution"] = spec;
  j["u"] = q.size();
  j["k"] = o.k;
  j["entropy_ld"] = h_ld;
  j["entropy_ln"] = a::entropy(q, a::LogBase::E);
  j["qs_entropy"] = a::qs_entropy(q);
  j["expected_search_cost_dp"] = dp;
  j["allen_munro_cost"] = a::allen_munro_cost(q);
  j["alpha_k"] = a::alpha_k(o.k);
  j["alpha_k_times_entropy"] = a::alpha_k(o.k) * h_ld;
  j["pivot_pmf"] = a::pivot_pmf(q, params);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const auto params = SampleParams::from_k(o.k);
  if (o.kind != "upper" && o.kind != "lower" && o.kind != "both")
    throw ValidationError("--kind must be upper, lower or both");
  Json j;
  j["k"] = o.k;
  j["eps"] = o.eps;
  j["alpha_k"] = a::alpha_k(o.k);
  bool all_valid = true;
  Json constants = Json::array();
  for (a::BoundKind kind : {a::BoundKind::Upper, a::BoundKind::Lower}) {
    if (o.kind != "both" && o.kind != a::to_string(kind)) continue;
    const a::BoundConstants b = a::bound_constants(kind, params, o.eps);
    all_valid = all_valid && b.valid;
    Json row{{"kind", a::to_string(kind)}, {"valid", b.valid}};
    if (b.valid) {
      row["c"] = b.c;
      row["d"] = b.d;
    } else {
      row["diagnostic"] = b.diagnostic;
    }
    row["tilde_H"] = b.tilde_H;
    row["tilde_h"] = b.tilde_h;
    constants.push_back(row);
  }
  j["bound_constants"] = constants;
  if (!o.dist.empty() || o.u > 0) {
    const UniverseDistribution q = parse_distribution_spec(resolve_distribution(o.dist, o.u));
    const std::uint64_t n = o.n > 0 ? o.n : 1000;
    j["sorting_lower_bound"] = {{"n", n}, {"value", a::sorting_lower_bound(q, n)}};
  }
  const a::HeightBoundConstants h =
      o.alpha > 0.0 ? a::height_constants(params, o.c, o.alpha) : a::optimize_height_alpha(params, o.c);
  j["height_constants"] = {{"c", h.c},         {"alpha", h.alpha}, {"p", h.p},
                           {"delta", h.delta}, {"eta", h.eta},     {"valid", h.valid}};
  out << j.dump(2) << '\n';
  if (!all_valid) return kExitFailed;
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  harness::ExperimentConfig cfg;
  cfg.experiment = harness::parse_experiment(o.experiment);
  cfg.distribution = resolve_distribution(o.dist, o.u > 0 ? o.u : 8);
  cfg.k = o.k;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.nu = o.nu;
  cfg.workers = o.workers;
  if (o.n > 0) cfg.n = o.n;
  else if (cfg.experiment == harness::Experiment::Exact) cfg.n = 7;
  if (cfg.experiment == harness::Experiment::Bounds) cfg.eps_grid = {o.eps};
  if (o.format == "csv") cfg.format = harness::OutputFormat::Csv;
  else if (o.format != "json") throw ValidationError("--format must be json or csv");

  const harness::ExperimentReport report = harness::run_experiment(cfg);
  const std::string json = report.to_json().dump(2) + "\n";
  if (!o.csv_path.empty()) write_output(report.to_csv(), o.csv_path, out);
  if (cfg.format == harness::OutputFormat::Csv && o.out_path.empty()) out << report.to_csv();
  else write_output(json, o.out_path, out);
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_report(const Options& o, std::ostream& out) {
  std::ifstream in(o.report_path);
  if (!in) throw ValidationError("cannot open report '" + o.report_path + "'");
  Json report;
  try {
    report = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
  out << harness::render_text(report);
  return harness::report_passed(report) ? kExitOk : kExitFailed;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fat-pivot Quicksort and fringe-balanced tree experiments", "fatpivot"};
  app.require_subcommand(1);

  auto add_k = [&](CLI::App* s) { s->add_option("--k", o.k, "sample size k = 2t+1")->capture_default_str(); };
  auto add_input = [&](CLI::App* s) {
    s->add_option("--input", o.input, "file of whitespace-separated positive integers ('-' for stdin)");
    s->add_option("--values", o.values, "values inline, e.g. \"7 4 2 9\"");
  };
  auto add_dist = [&](CLI::App* s) {
    s->add_option("--dist", o.dist, "uniform:u | two:p | weights:path");
    s->add_option("--u", o.u, "shorthand for --dist uniform:u");
  };

  CLI::App* sort = app.add_subcommand("sort", "sort values, print the ledger and recursion tree");
  add_input(sort);
  add_k(sort);

  CLI::App* tree = app.add_subcommand("tree", "insert values into a fringe tree, print digest and depths");
  add_input(tree);
  add_k(tree);
  tree->add_option("--u", o.u, "universe size (default: largest value)");

  CLI::App* exact = app.add_subcommand("exact", "entropies, expected search cost and alpha_k for a distribution");
  add_dist(exact);
  add_k(exact);

  CLI::App* bounds = app.add_subcommand("bounds", "bound constants, lower bound and height constants");
  add_k(bounds);
  add_dist(bounds);
  bounds->add_option("--eps", o.eps)->capture_default_str();
  bounds->add_option("--kind", o.kind, "upper | lower | both")->capture_default_str();
  bounds->add_option("--n", o.n, "input size for the sorting lower bound (default 1000)");
  bounds->add_option("--c", o.c, "height factor")->capture_default_str();
  bounds->add_option("--alpha", o.alpha, "height split parameter (default: grid optimum)");

  CLI::App* sim = app.add_subcommand("simulate", "run an experiment and emit its report");
  sim->add_option("--experiment", o.experiment, "equiv | cost | height | degeneracy | exact | bounds")
      ->capture_default_str();
  add_dist(sim);
  add_k(sim);
  sim->add_option("--n", o.n, "input size (default 1000; exact: 7)");
  sim->add_option("--trials", o.trials)->capture_default_str();
  sim->add_option("--seed", o.seed)->capture_default_str();
  sim->add_option("--nu", o.nu, "degeneracy prefix exponent")->capture_default_str();
  sim->add_option("--eps", o.eps, "bounds experiment eps")->capture_default_str();
  sim->add_option("--workers", o.workers, "worker threads, 0 = all cores")->capture_default_str();
  sim->add_option("--out", o.out_path, "write the report here instead of stdout");
  sim->add_option("--csv", o.csv_path, "write per-trial CSV here");
  sim->add_option("--format", o.format, "json | csv (stdout format)")->capture_default_str();

  CLI::App* rep = app.add_subcommand("report", "render a stored JSON report");
  rep->add_option("--in", o.report_path, "report file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (sort->parsed()) return cmd_sort(o, out);
    if (tree->parsed()) return cmd_tree(o, out);
    if (exact->parsed()) return cmd_exact(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (sim->parsed()) return cmd_simulate(o, out);
    if (rep->parsed()) return cmd_report(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace fatpivot
