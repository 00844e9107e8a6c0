#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with its own streams.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shbin/shbin.hpp"

namespace shbin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCompute = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string probs;
  std::string probs_file;
  bool uniform_spread = false;
  std::size_t m = 100;
  double max_prob = 1.0;
  std::string method;
  std::string metric = "tv";
  std::string out;
  std::string grid;
  bool csv = false;
  bool exact_digits = false;
};

inline BernoulliEnsemble load_ensemble(const Options& opt) {
  const int sources = int(!opt.probs.empty()) + int(!opt.probs_file.empty()) + int(opt.uniform_spread);
  if (sources != 1) {
    throw usage_error("give exactly one of --probs, --probs-file or --uniform-spread");
  }
  if (!opt.probs.empty()) {
    return make_ensemble(parse_probability_list(opt.probs));
  }
  if (!opt.probs_file.empty()) {
    std::ifstream in(opt.probs_file);
    if (!in) {
      throw std::runtime_error("cannot open probability file '" + opt.probs_file + "'");
    }
    return make_ensemble(read_probabilities(in, opt.probs_file));
  }
  return ensemble_from_spec(GeneratorKind::uniform_spread, opt.m, opt.max_prob);
}

inline Method require_method(const Options& opt) {
  if (opt.method.empty()) {
    throw usage_error("--method is required; valid methods: " + method_list());
  }
  try {
    return parse_method(opt.method);
  } catch (const invalid_input& e) {
    throw usage_error(e.what());
  }
}

// "start:stop:points"
inline SweepGrid parse_grid(const std::string& text) {
  SweepGrid grid;
  if (text.empty()) return grid;
  std::istringstream in(text);
  char c1 = 0;
  char c2 = 0;
  if (!(in >> grid.start >> c1 >> grid.stop >> c2 >> grid.points) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw usage_error("--grid expects start:stop:points, got '" + text + "'");
  }
  return grid;
}

/// Writes to --out when given, otherwise to the supplied stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback), path_(path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw std::runtime_error("failed writing output '" + path_ + "'");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  std::string path_;
};

inline int cmd_exact(const Options& opt, std::ostream& out) {
  const auto e = load_ensemble(opt);
  Sink sink(opt.out, out);
  write_pmf_csv(sink.stream(), exact_pmf(e), opt.exact_digits ? kExactDigits : kCsvDigits);
  sink.finish();
  return kExitOk;
}

inline int cmd_approx(const Options& opt, std::ostream& out) {
  const auto method = require_method(opt);
  const auto e = load_ensemble(opt);
  const auto approx = approximate(e, method);
  Sink sink(opt.out, out);
  auto& os = sink.stream();
  os << "# method=" << method_name(method);
  for (const auto& [name, value] : approx.params) os << ' ' << name << '=' << format_decimal(value);
  os << '\n';
  write_pmf_csv(os, approx.pmf, opt.exact_digits ? kExactDigits : kCsvDigits);
  sink.finish();
  return kExitOk;
}

inline int cmd_distance(const Options& opt, std::ostream& out) {
  const auto method = require_method(opt);
  if (opt.metric != "tv" && opt.metric != "loc") {
    throw usage_error("--metric must be 'tv' or 'loc'");
  }
  const auto e = load_ensemble(opt);
  const auto exact = exact_pmf(e);
  const auto approx = approximate(e, method);
  const double d = opt.metric == "tv" ? tv_distance(exact, approx.pmf) : loc_distance(exact, approx.pmf);
  Sink sink(opt.out, out);
  sink.stream() << format_decimal(d) << '\n';
  sink.finish();
  return kExitOk;
}

inline int cmd_bounds(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto e = load_ensemble(opt);
  const auto ms = moments(e);
  const auto report = evaluate_bounds(e);
  if (!report.applicable) {
    for (const auto& note : report.notes) err << "warning: " << note << '\n';
  }
  constexpr double kNa = std::numeric_limits<double>::quiet_NaN();
  double ehm = kNa;
  double two = kNa;
  try {
    ehm = ehm_bound(e);
  } catch (const std::domain_error&) {
  }
  try {
    two = two_param_bound(e, ms, exact_pmf(e));
  } catch (const std::domain_error&) {
  }
  Sink sink(opt.out, out);
  if (opt.csv) {
    sink.stream() << kBoundCsvHeader << '\n';
    write_bound_csv_row(sink.stream(), report, ehm, two);
  } else {
    write_bound_table(sink.stream(), report, ehm, two);
  }
  sink.finish();
  return kExitOk;
}

inline int cmd_sweep(const Options& opt, std::ostream& out) {
  if (opt.m < 2) throw usage_error("sweep needs --m >= 2");
  const auto grid = parse_grid(opt.grid);
  const auto rows = run_sweep(opt.m, grid);
  Sink sink(opt.out, out);
  write_sweep_csv(sink.stream(), rows);
  sink.finish();
  return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poisson-binomial laws, their approximations, and shifted binomial error bounds", "shbin"};
  Options opt;
  app.add_option("--probs", opt.probs, "comma separated success probabilities");
  app.add_option("--probs-file", opt.probs_file, "file with one probability per line");
  app.add_flag("--uniform-spread", opt.uniform_spread, "use p_i = i * max_prob / (m + 1)");
  app.add_option("--m", opt.m, "number of summands for --uniform-spread and sweep")->capture_default_str();
  app.add_option("--max-prob", opt.max_prob, "largest generator probability M")->capture_default_str();
  app.add_option("--method", opt.method, "approximation: " + method_list());
  app.add_option("--metric", opt.metric, "tv or loc")->capture_default_str();
  app.add_option("--out", opt.out, "output file (default stdout)");
  app.add_option("--grid", opt.grid, "sweep grid start:stop:points (default 0.05:1:20)");
  app.add_flag("--csv", opt.csv, "bounds as a CSV row instead of a table");
  app.add_flag("--exact-digits", opt.exact_digits, "print PMF masses with 17 significant digits");

  auto* exact = app.add_subcommand("exact", "exact law of W as k,mass rows")->fallthrough();
  auto* approx = app.add_subcommand("approx", "fitted parameters and PMF of one approximation")->fallthrough();
  auto* distance = app.add_subcommand("distance", "exact distance between W and one approximation")->fallthrough();
  auto* bounds = app.add_subcommand("bounds", "error bounds and their constituents")->fallthrough();
  auto* sweep = app.add_subcommand("sweep", "TV of all approximations over a grid of M")->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (exact->parsed()) return cmd_exact(opt, out);
    if (approx->parsed()) return cmd_approx(opt, out);
    if (distance->parsed()) return cmd_distance(opt, out);
    if (bounds->parsed()) return cmd_bounds(opt, out, err);
    if (sweep->parsed()) return cmd_sweep(opt, out);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitUsage;
}

}  // namespace shbin::cli
