#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sinrmc/estimator_types.hpp"
#include "sinrmc/sinr.hpp"

namespace sinrmc::harness {

enum class Experiment { kAvgCount, kIsolation, kOptPair, kLambdaCurve, kValidate };

/// none: untilted; pair: (mu_r, mu_t) as given; ldp: optimal_pair(a);
/// ce: cross-entropy pilot of `pilot` replicates; radial: lambda_opt profile.
enum class TiltKind { kNone, kPair, kLdp, kCe, kRadial };

struct RunConfig {
  Experiment experiment = Experiment::kAvgCount;
  double alpha = 4.0;
  double w = 1.0;
  double t = 1.0;
  double n = 25.0;
  double a = 0.5;
  double mu_r = 1.0;
  double mu_t = 1.0;
  double lambda_r = 1.0;
  double lambda_t = 1.0;
  std::size_t runs = 100000;
  std::uint64_t seed = 42;
  bool seed_given = false;
  std::optional<double> margin;  // nullopt = auto
  double trunc_b = 20.0;
  bool tail_compensation = true;
  double grid_h = 0.05;
  TiltKind tilt = TiltKind::kNone;
  std::size_t pilot = 0;
  int workers = 1;
  std::string out;
  double r_out = 35.0;
  std::size_t points = 200;
  double tol = 1e-12;
  std::size_t samples = 100000;  // validate: oracle sample counts
  double disk_radius = 50.0;     // validate: interferer disk

  /// Assigns one field from its textual form. Throws ParseError(line) on an
  /// unknown key or a malformed value.
  void set(std::string_view key, std::string_view value, int line = 0);

  ModelParams model() const;
};

/// Every key accepted by RunConfig::set, in documentation order.
const std::vector<std::string>& config_keys();

/// `key = value` lines; `#` starts a comment; blank lines are skipped.
RunConfig parse_config_text(std::string_view text, RunConfig base = {});
RunConfig parse_config_file(const std::string& path, RunConfig base = {});

/// Serializes every field so that parse_config_text reproduces `config`.
std::string to_config_text(const RunConfig& config);

/// Applies SINRMC_SEED when no seed was given explicitly.
void apply_environment(RunConfig& config);

std::string experiment_name(Experiment e);
std::string tilt_name(TiltKind k);

struct ResultRow {
  std::string experiment;
  std::string estimator;
  double mu_r = 1.0;
  std::optional<double> mu_t;  // nullopt prints "radial"
  double t = 1.0;
  std::optional<double> n;
  std::optional<double> a;
  std::size_t runs = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
  std::size_t hits = 0;
  double wall_s = 0.0;
};

std::string csv_header();
std::string format_row(const ResultRow& row);

/// Names of the preset experiments.
const std::vector<std::string>& preset_names();
/// Throws ParseError for an unknown preset.
RunConfig preset(std::string_view name);

/// Estimator rows for avg-count and isolation configurations.
std::vector<ResultRow> run_estimates(const RunConfig& config);

/// Rejects invalid parameter combinations with ParameterError.
void check_config(const RunConfig& config);

/// Dispatches the configured experiment. Returns 0 on success, 1 on a
/// parameter error, 2 when a validation check fails.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sinrmc::harness
