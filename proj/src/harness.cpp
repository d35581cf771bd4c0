#include "sinrmc/harness.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "sinrmc/error.hpp"
#include "sinrmc/estimate.hpp"
#include "sinrmc/oracle.hpp"
#include "sinrmc/rng.hpp"
#include "sinrmc/tilt.hpp"

namespace sinrmc::harness {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, int line,
                            const char* expected) {
  throw ParseError(line, "invalid value '" + std::string(value) + "' for " + std::string(key) +
                             " (expected " + expected + ")");
}

double parse_real(std::string_view key, std::string_view value, int line) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out))
    bad_value(key, value, line, "a finite number");
  return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value, int line) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec == std::errc() && ptr == value.data() + value.size()) return out;
  // Accept integral scientific notation such as 2e5.
  double d = 0.0;
  const auto [p2, e2] = std::from_chars(value.data(), value.data() + value.size(), d);
  if (e2 != std::errc() || p2 != value.data() + value.size() || !(d >= 0.0) || d > 1e18 ||
      std::floor(d) != d)
    bad_value(key, value, line, "a nonnegative integer");
  return static_cast<std::uint64_t>(d);
}

bool parse_bool(std::string_view key, std::string_view value, int line) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  bad_value(key, value, line, "true or false");
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out);
  if (!file) throw ParameterError("cannot open output file " + config.out);
  file << text;
}

}  // namespace

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::kAvgCount: return "avg-count";
    case Experiment::kIsolation: return "isolation";
    case Experiment::kOptPair: return "opt-pair";
    case Experiment::kLambdaCurve: return "lambda-curve";
    case Experiment::kValidate: return "validate";
  }
  return "?";
}

std::string tilt_name(TiltKind k) {
  switch (k) {
    case TiltKind::kNone: return "none";
    case TiltKind::kPair: return "pair";
    case TiltKind::kLdp: return "ldp";
    case TiltKind::kCe: return "ce";
    case TiltKind::kRadial: return "radial";
  }
  return "?";
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "experiment", "alpha",  "w",       "t",    "n",      "a",       "mu_r",
      "mu_t",       "lambda_r", "lambda_t", "runs", "seed", "margin", "trunc_b",
      "tail_compensation", "grid_h", "tilt", "pilot", "workers", "out", "r_out",
      "points",     "tol",    "samples", "disk_radius"};
  return keys;
}

void RunConfig::set(std::string_view key, std::string_view value, int line) {
  value = trim(value);
  if (key == "experiment") {
    for (auto e : {Experiment::kAvgCount, Experiment::kIsolation, Experiment::kOptPair,
                   Experiment::kLambdaCurve, Experiment::kValidate}) {
      if (value == experiment_name(e)) {
        experiment = e;
        return;
      }
    }
    bad_value(key, value, line, "avg-count, isolation, opt-pair, lambda-curve or validate");
  }
  if (key == "tilt") {
    for (auto k : {TiltKind::kNone, TiltKind::kPair, TiltKind::kLdp, TiltKind::kCe,
                   TiltKind::kRadial}) {
      if (value == tilt_name(k)) {
        tilt = k;
        return;
      }
    }
    bad_value(key, value, line, "none, pair, ldp, ce or radial");
  }
  if (key == "out") {
    out = std::string(value);
    return;
  }
  if (value.empty()) throw ParseError(line, "missing value for " + std::string(key));

  if (key == "alpha") alpha = parse_real(key, value, line);
  else if (key == "w") w = parse_real(key, value, line);
  else if (key == "t") t = parse_real(key, value, line);
  else if (key == "n") n = parse_real(key, value, line);
  else if (key == "a") a = parse_real(key, value, line);
  else if (key == "mu_r") mu_r = parse_real(key, value, line);
  else if (key == "mu_t") mu_t = parse_real(key, value, line);
  else if (key == "lambda_r") lambda_r = parse_real(key, value, line);
  else if (key == "lambda_t") lambda_t = parse_real(key, value, line);
  else if (key == "runs") runs = parse_unsigned(key, value, line);
  else if (key == "seed") {
    seed = parse_unsigned(key, value, line);
    seed_given = true;
  } else if (key == "margin") {
    if (value == "auto") margin.reset();
    else margin = parse_real(key, value, line);
  } else if (key == "trunc_b") {
    if (value == "inf" || value == "unbounded") trunc_b = kUnbounded;
    else trunc_b = parse_real(key, value, line);
  } else if (key == "tail_compensation") tail_compensation = parse_bool(key, value, line);
  else if (key == "grid_h") grid_h = parse_real(key, value, line);
  else if (key == "pilot") pilot = parse_unsigned(key, value, line);
  else if (key == "workers") {
    const auto v = parse_unsigned(key, value, line);
    if (v < 1 || v > 1024) bad_value(key, value, line, "an integer in [1, 1024]");
    workers = static_cast<int>(v);
  } else if (key == "r_out") r_out = parse_real(key, value, line);
  else if (key == "points") points = parse_unsigned(key, value, line);
  else if (key == "tol") tol = parse_real(key, value, line);
  else if (key == "samples") samples = parse_unsigned(key, value, line);
  else if (key == "disk_radius") disk_radius = parse_real(key, value, line);
  else throw ParseError(line, "unknown key '" + std::string(key) + "'");
}

ModelParams RunConfig::model() const {
  ModelParams p;
  p.alpha = alpha;
  p.w = w;
  p.t = t;
  p.lambda_R = lambda_r;
  p.lambda_T = lambda_t;
  p.trunc_b = trunc_b;
  p.tail_compensation = tail_compensation;
  return p;
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(line_no, "missing key");
    base.set(key, line.substr(eq + 1), line_no);
  }
  return base;
}

RunConfig parse_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), std::move(base));
}

std::string to_config_text(const RunConfig& c) {
  std::ostringstream s;
  s << "experiment = " << experiment_name(c.experiment) << '\n'
    << "alpha = " << format_real(c.alpha) << '\n'
    << "w = " << format_real(c.w) << '\n'
    << "t = " << format_real(c.t) << '\n'
    << "n = " << format_real(c.n) << '\n'
    << "a = " << format_real(c.a) << '\n'
    << "mu_r = " << format_real(c.mu_r) << '\n'
    << "mu_t = " << format_real(c.mu_t) << '\n'
    << "lambda_r = " << format_real(c.lambda_r) << '\n'
    << "lambda_t = " << format_real(c.lambda_t) << '\n'
    << "runs = " << c.runs << '\n';
  if (c.seed_given) s << "seed = " << c.seed << '\n';
  s << "margin = " << (c.margin ? format_real(*c.margin) : "auto") << '\n'
    << "trunc_b = " << format_real(c.trunc_b) << '\n'
    << "tail_compensation = " << (c.tail_compensation ? "true" : "false") << '\n'
    << "grid_h = " << format_real(c.grid_h) << '\n'
    << "tilt = " << tilt_name(c.tilt) << '\n'
    << "pilot = " << c.pilot << '\n'
    << "workers = " << c.workers << '\n'
    << "out = " << c.out << '\n'
    << "r_out = " << format_real(c.r_out) << '\n'
    << "points = " << c.points << '\n'
    << "tol = " << format_real(c.tol) << '\n'
    << "samples = " << c.samples << '\n'
    << "disk_radius = " << format_real(c.disk_radius) << '\n';
  return s.str();
}

void apply_environment(RunConfig& config) {
  if (config.seed_given) return;
  if (const char* env = std::getenv("SINRMC_SEED"); env != nullptr && *env != '\0') {
    try {
      config.set("seed", env, 0);
    } catch (const ParseError& e) {
      throw ParseError(0, std::string("SINRMC_SEED: ") + e.what());
    }
  }
}

std::string csv_header() {
  return "experiment,estimator,mu_r,mu_t,t,n,a,runs,seed,estimate,variance,std_error,hits,wall_s";
}

std::string format_row(const ResultRow& r) {
  std::ostringstream s;
  s << r.experiment << ',' << r.estimator << ',' << format_real(r.mu_r) << ','
    << (r.mu_t ? format_real(*r.mu_t) : "radial") << ',' << format_real(r.t) << ','
    << (r.n ? format_real(*r.n) : "") << ',' << (r.a ? format_real(*r.a) : "") << ','
    << r.runs << ',' << r.seed << ',' << format_real(r.estimate) << ','
    << format_real(r.variance) << ',' << format_real(r.std_error) << ',' << r.hits << ','
    << format_real(r.wall_s);
  return s.str();
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"table1-basic", "table1-ldp", "table1-ce",
                                                 "table2-basic", "table2-is",  "figure2"};
  return names;
}

RunConfig preset(std::string_view name) {
  RunConfig c;
  if (name.starts_with("table1-")) {
    c.experiment = Experiment::kAvgCount;
    c.n = 25.0;
    c.a = 0.5;
    c.t = 1.0;
    c.runs = 200000;
    if (name == "table1-basic") return c;
    if (name == "table1-ldp") {
      c.tilt = TiltKind::kLdp;
      return c;
    }
    if (name == "table1-ce") {
      c.tilt = TiltKind::kCe;
      c.pilot = 100000;
      return c;
    }
  } else if (name.starts_with("table2-")) {
    c.experiment = Experiment::kIsolation;
    c.t = 0.002;
    c.runs = 20000;
    c.grid_h = 0.05;
    if (name == "table2-basic") return c;
    if (name == "table2-is") {
      c.tilt = TiltKind::kRadial;
      return c;
    }
  } else if (name == "figure2") {
    c.experiment = Experiment::kLambdaCurve;
    c.points = 200;
    return c;
  }
  throw ParseError(0, "unknown preset '" + std::string(name) + "'");
}

void check_config(const RunConfig& c) {
  c.model().validate();
  if (c.workers < 1) throw ParameterError("workers must be >= 1");
  switch (c.experiment) {
    case Experiment::kAvgCount:
      if (c.tilt == TiltKind::kRadial)
        throw ParameterError("radial tilt applies to isolation, not avg-count");
      if (c.tilt == TiltKind::kCe && c.pilot < 1)
        throw ParameterError("tilt ce needs a cross-entropy pilot (pilot >= 1)");
      if (c.tilt != TiltKind::kCe && c.pilot > 0)
        throw ParameterError("pilot runs only apply to tilt ce");
      if (c.tilt == TiltKind::kLdp &&
          (c.alpha != 4.0 || c.w != 1.0 || c.t != 1.0 || c.lambda_r != 1.0 || c.lambda_t != 1.0))
        throw ParameterError("tilt ldp needs alpha = 4, w = t = 1 and unit base intensities");
      if (!(c.n > 0.0)) throw ParameterError("n must be > 0");
      if (c.runs < 2) throw ParameterError("runs must be >= 2");
      break;
    case Experiment::kIsolation:
      if (c.tilt != TiltKind::kNone && c.tilt != TiltKind::kRadial)
        throw ParameterError("isolation takes tilt none or radial");
      if (c.pilot > 0) throw ParameterError("pilot runs only apply to avg-count");
      if (!(c.grid_h > 0.0)) throw ParameterError("grid_h must be > 0");
      if (!(c.r_out >= c.model().connection_radius()))
        throw ParameterError("r_out must be at least the connection radius");
      if (c.tilt == TiltKind::kRadial && c.points < 2)
        throw ParameterError("points must be >= 2");
      if (c.runs < 2) throw ParameterError("runs must be >= 2");
      break;
    case Experiment::kLambdaCurve:
      if (c.points < 2) throw ParameterError("points must be >= 2");
      if (!(c.tol > 0.0)) throw ParameterError("tol must be > 0");
      break;
    case Experiment::kOptPair:
      if (!(c.a > 0.0)) throw ParameterError("a must be > 0");
      break;
    case Experiment::kValidate:
      if (c.samples < 100) throw ParameterError("samples must be >= 100");
      break;
  }
}

std::vector<ResultRow> run_estimates(const RunConfig& c) {
  check_config(c);
  const ModelParams params = c.model();
  std::vector<ResultRow> rows;
  auto row_from = [&](const EstimatorReport& r, std::string label, double mu_r,
                      std::optional<double> mu_t) {
    ResultRow row;
    row.experiment = experiment_name(c.experiment);
    row.estimator = std::move(label);
    row.mu_r = mu_r;
    row.mu_t = mu_t;
    row.t = c.t;
    if (c.experiment == Experiment::kAvgCount) {
      row.n = c.n;
      row.a = c.a;
    }
    row.runs = r.n_runs;
    row.seed = r.master_seed;
    row.estimate = r.estimate;
    row.variance = r.single_run_variance;
    row.std_error = r.std_error;
    row.hits = r.hits;
    row.wall_s = r.wall_seconds;
    return row;
  };

  if (c.experiment == Experiment::kAvgCount) {
    const EventSpec event{FunctionalKind::kAvgConnectCount, Comparison::kLess, c.a};
    EventOptions options;
    options.workers = c.workers;
    options.margin = c.margin;
    TiltSpec tilt = NoTilt{};
    std::string label = "basic";
    double mu_r = c.lambda_r;
    double mu_t = c.lambda_t;
    if (c.tilt == TiltKind::kPair) {
      tilt = PairTilt{c.mu_r, c.mu_t};
      label = "pair";
      mu_r = c.mu_r;
      mu_t = c.mu_t;
    } else if (c.tilt == TiltKind::kLdp) {
      const IntensityPair p = optimal_pair(c.a);
      tilt = PairTilt{p.mu_R, p.mu_T};
      label = "ldp";
      mu_r = p.mu_R;
      mu_t = p.mu_T;
    } else if (c.tilt == TiltKind::kCe) {
      const std::uint64_t pilot_seed = mix64(c.seed ^ 0x70696C6F74ULL);
      const PilotResult pilot =
          cross_entropy_pilot(event, params, c.n, c.pilot, pilot_seed, options);
      rows.push_back(row_from(pilot.pilot, "ce-pilot", pilot.tilt.mu_R, pilot.tilt.mu_T));
      tilt = PairTilt{pilot.tilt.mu_R, pilot.tilt.mu_T};
      label = "ce";
      mu_r = pilot.tilt.mu_R;
      mu_t = pilot.tilt.mu_T;
    }
    const EstimatorReport report = estimate_event(event, params, c.n, tilt, c.runs, c.seed, options);
    rows.push_back(row_from(report, label, mu_r, mu_t));
    return rows;
  }

  if (c.experiment == Experiment::kIsolation) {
    IsolationOptions options;
    options.workers = c.workers;
    options.outer_radius = c.r_out;
    if (c.tilt == TiltKind::kRadial) {
      const RadialTilt tilt{tabulate_lambda_profile(c.points, c.tol)};
      rows.push_back(row_from(estimate_isolation(params, tilt, c.runs, c.grid_h, c.seed, options),
                              "radial-is", c.lambda_r, std::nullopt));
    } else {
      rows.push_back(
          row_from(estimate_isolation(params, NoTilt{}, c.runs, c.grid_h, c.seed, options),
                   "basic", c.lambda_r, c.lambda_t));
    }
    return rows;
  }
  throw ParameterError("experiment " + experiment_name(c.experiment) + " produces no estimator rows");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    switch (config.experiment) {
      case Experiment::kAvgCount:
      case Experiment::kIsolation: {
        std::string text = csv_header() + '\n';
        for (const auto& row : run_estimates(config)) text += format_row(row) + '\n';
        write_output(config, out, text);
        return 0;
      }
      case Experiment::kOptPair: {
        const IntensityPair p = optimal_pair(config.a);
        write_output(config, out,
                     "a,mu_r,mu_t\n" + format_real(config.a) + ',' + format_real(p.mu_R) + ',' +
                         format_real(p.mu_T) + '\n');
        return 0;
      }
      case Experiment::kLambdaCurve: {
        std::ostringstream s;
        write_profile_csv(s, tabulate_lambda_profile(config.points, config.tol));
        write_output(config, out, s.str());
        return 0;
      }
      case Experiment::kValidate: {
        oracle::ValidationOptions options;
        options.interference_samples = config.samples;
        options.count_samples = config.samples;
        options.disk_radius = config.disk_radius;
        options.seed = config.seed;
        options.workers = config.workers;
        bool all_pass = true;
        std::ostringstream s;
        for (const auto& check : oracle::run_validation(options)) {
          char buf[256];
          std::snprintf(buf, sizeof buf, "%-48s %-12.6g %-10.3g %s\n", check.name.c_str(),
                        check.statistic, check.bound, check.pass ? "PASS" : "FAIL");
          s << buf;
          all_pass = all_pass && check.pass;
        }
        write_output(config, out, s.str());
        return all_pass ? 0 : 2;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::runtime_error& e) {
    // Solver, pilot and weight failures: the configuration cannot be run as given.
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace sinrmc::harness
