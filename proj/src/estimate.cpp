#include "sinrmc/estimate.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>
#include <variant>

#include "sinrmc/error.hpp"
#include "sinrmc/parallel.hpp"
#include "sinrmc/ppp.hpp"
#include "sinrmc/rng.hpp"

namespace sinrmc {
namespace {

double log_ratio_term(std::size_t count, double mu, double base) {
  if (count == 0) return 0.0;
  if (!(mu > 0.0)) throw WeightError("tilted intensity is zero at an occupied configuration");
  return static_cast<double>(count) * std::log(mu / base);
}

// Homogeneous points on outer \ inner, drawn by rejection from the outer square.
void append_annulus(const Window& outer, const Window& inner, double intensity, Rng& rng,
                    std::vector<Point2>& out) {
  const std::size_t first = out.size();
  append_homogeneous(outer, intensity, rng, out);
  std::size_t keep = first;
  for (std::size_t i = first; i < out.size(); ++i) {
    if (!inner.contains(out[i])) out[keep++] = out[i];
  }
  out.resize(keep);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

EstimatorReport make_report(const std::vector<double>& values, std::size_t hits,
                            std::uint64_t seed, std::chrono::steady_clock::time_point start) {
  const SampleStats s = summarize(values);
  EstimatorReport report;
  report.n_runs = values.size();
  report.estimate = s.mean;
  report.single_run_variance = s.variance;
  report.std_error = s.std_error;
  report.hits = hits;
  report.master_seed = seed;
  report.wall_seconds = seconds_since(start);
  return report;
}

double checked_exp(double log_w) {
  if (log_w > kMaxLogWeight) throw WeightError("tilt too aggressive: log-weight exceeds 700");
  return std::exp(log_w);
}

}  // namespace

LogWeight pair_log_weight(std::size_t x_count_in, std::size_t y_count_in, double area,
                          double mu_R, double mu_T, double base_R, double base_T) {
  if (!(area >= 0.0)) throw ParameterError("area must be >= 0");
  if (!(mu_R >= 0.0) || !(mu_T >= 0.0)) throw WeightError("tilted intensities must be >= 0");
  const double log_w = area * (mu_R - base_R) + area * (mu_T - base_T) -
                       log_ratio_term(x_count_in, mu_T, base_T) -
                       log_ratio_term(y_count_in, mu_R, base_R);
  return {log_w};
}

RadialWeight::RadialWeight(RadialIntensity profile, double scale, double window_radius,
                           double base_intensity)
    : profile_(std::move(profile)), scale_(scale) {
  if (!(scale > 0.0)) throw ParameterError("radial scale must be > 0");
  if (!(window_radius >= scale)) throw ParameterError("tilt window must contain the scaled disk");
  if (!(base_intensity > 0.0)) throw ParameterError("base intensity must be > 0");
  // int_disk (lambda(|y|/scale) - 1) dy, split at |y| = scale.
  const double inner = 2.0 * std::numbers::pi * scale * scale * (profile_.radial_moment() - 0.5);
  const double outer = (profile_.boundary_value() - 1.0) * std::numbers::pi *
                       (window_radius * window_radius - scale * scale);
  integral_ = base_intensity * (inner + outer);
}

LogWeight RadialWeight::operator()(std::span<const Point2> transmitters) const {
  double log_sum = 0.0;
  for (const Point2& p : transmitters) {
    const double lam = profile_(norm(p) / scale_);
    if (!(lam > 0.0)) throw WeightError("radial profile is zero at an occupied radius");
    log_sum += std::log(lam);
  }
  return {integral_ - log_sum};
}

LogWeight radial_log_weight(std::span<const Point2> transmitters, const RadialIntensity& profile,
                            double scale) {
  return RadialWeight(profile, scale, scale)(transmitters);
}

SampleStats summarize(std::span<const double> values) {
  if (values.size() < 2) throw ParameterError("summary needs at least two values");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double variance = ss / (n - 1.0);
  return {mean, variance, std::sqrt(variance / n)};
}

double resolve_margin(const ModelParams& params, const EventOptions& options) {
  if (options.margin) {
    if (!(*options.margin >= 0.0) || !std::isfinite(*options.margin))
      throw ParameterError("margin must be finite and >= 0");
    return *options.margin;
  }
  const double rc = params.connection_radius();
  return std::isfinite(params.trunc_b) ? rc + params.trunc_b : rc;
}

EventReplicate simulate_event_replicate(const EventSpec& event, const ModelParams& params,
                                        double n, double margin, const PairTilt& tilt,
                                        std::uint64_t seed, std::uint64_t index) {
  const Window inner = Window::square(n);
  Rng tx_rng(derive_replicate_seed({seed, stream::kTransmitters}, index));
  Rng rx_rng(derive_replicate_seed({seed, stream::kReceivers}, index));

  std::vector<Point2> transmitters;
  std::vector<Point2> receivers;
  append_homogeneous(inner, tilt.mu_T, tx_rng, transmitters);
  append_homogeneous(inner, tilt.mu_R, rx_rng, receivers);
  EventReplicate rep;
  rep.x_count_in = transmitters.size();
  rep.y_count_in = receivers.size();
  if (margin > 0.0) {
    const Window outer = Window::square(n + 2.0 * margin);
    append_annulus(outer, inner, params.lambda_T, tx_rng, transmitters);
    append_annulus(outer, inner, params.lambda_R, rx_rng, receivers);
  }

  const ConnectionCounts counts = count_connections(transmitters, receivers, inner, params);
  const double hits = event.functional == FunctionalKind::kAvgConnectCount
                          ? static_cast<double>(counts.connections)
                          : static_cast<double>(counts.isolated);
  rep.functional = hits / inner.area();
  rep.occurred = event.occurs(rep.functional);
  rep.log_w = pair_log_weight(rep.x_count_in, rep.y_count_in, inner.area(), tilt.mu_R,
                              tilt.mu_T, params.lambda_R, params.lambda_T)
                  .log_w;
  return rep;
}

EstimatorReport estimate_event(const EventSpec& event, const ModelParams& params, double n,
                               const TiltSpec& tilt, std::size_t runs, std::uint64_t seed,
                               const EventOptions& options) {
  params.validate();
  if (runs < 2) throw ParameterError("estimator needs at least two replicates");
  if (!(n > 0.0)) throw ParameterError("window side n must be > 0");
  PairTilt pair{params.lambda_R, params.lambda_T};
  if (const auto* p = std::get_if<PairTilt>(&tilt)) {
    pair = *p;
  } else if (std::holds_alternative<RadialTilt>(tilt)) {
    throw ParameterError("radial tilt does not apply to the windowed event estimator");
  }
  const auto start = std::chrono::steady_clock::now();
  const double margin = resolve_margin(params, options);

  struct Sample {
    double value = 0.0;
    bool hit = false;
  };
  const auto samples = run_indexed<Sample>(runs, options.workers, [&](std::size_t i) {
    const EventReplicate rep = simulate_event_replicate(event, params, n, margin, pair, seed, i);
    return Sample{rep.occurred ? checked_exp(rep.log_w) : 0.0, rep.occurred};
  });

  std::vector<double> values(runs);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    values[i] = samples[i].value;
    hits += samples[i].hit ? 1 : 0;
  }
  return make_report(values, hits, seed, start);
}

namespace {

// Transmitter field of one isolation replicate together with its log-weight.
class IsolationSampler {
 public:
  IsolationSampler(const ModelParams& params, const TiltSpec& tilt, const IsolationOptions& options)
      : params_(params), disk_(Window::disk(options.outer_radius)) {
    params_.validate();
    const double scale = params_.connection_radius();
    if (const auto* radial = std::get_if<RadialTilt>(&tilt)) {
      std::vector<double> scaled(radial->profile.values().begin(), radial->profile.values().end());
      for (double& v : scaled) v *= params_.lambda_T;
      const auto grid = radial->profile.grid();
      sampling_profile_.emplace(std::vector<double>(grid.begin(), grid.end()), std::move(scaled));
      weight_.emplace(radial->profile, scale, options.outer_radius, params_.lambda_T);
    } else if (std::holds_alternative<PairTilt>(tilt)) {
      throw ParameterError("pair tilt does not apply to the isolation estimator");
    }
    scale_ = scale;
  }

  double sample(std::uint64_t seed, std::uint64_t index, std::vector<Point2>& transmitters) const {
    Rng rng(derive_replicate_seed({seed, stream::kTransmitters}, index));
    transmitters.clear();
    if (!sampling_profile_) {
      append_homogeneous(disk_, params_.lambda_T, rng, transmitters);
      return 0.0;
    }
    append_radial(disk_, *sampling_profile_, scale_, rng, transmitters);
    return (*weight_)(transmitters).log_w;
  }

  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
  Window disk_;
  double scale_ = 1.0;
  std::optional<RadialIntensity> sampling_profile_;
  std::optional<RadialWeight> weight_;
};

}  // namespace

EstimatorReport estimate_isolation(const ModelParams& params, const TiltSpec& tilt,
                                   std::size_t runs, double grid_h, std::uint64_t seed,
                                   const IsolationOptions& options) {
  if (runs < 2) throw ParameterError("estimator needs at least two replicates");
  if (!(grid_h > 0.0)) throw ParameterError("grid_h must be > 0");
  const auto start = std::chrono::steady_clock::now();
  const IsolationSampler sampler(params, tilt, options);
  const double lambda_R = sampler.params().lambda_R;

  const auto values = run_indexed<double>(runs, options.workers, [&](std::size_t i) {
    std::vector<Point2> transmitters;
    const double log_w = sampler.sample(seed, i, transmitters);
    const double area = good_region_area(transmitters, sampler.params(), grid_h);
    return checked_exp(log_w - lambda_R * area);
  });
  std::size_t hits = 0;
  for (double v : values) hits += v > 0.0 ? 1 : 0;
  return make_report(values, hits, seed, start);
}

EstimatorReport estimate_isolation_indicator(const ModelParams& params, const TiltSpec& tilt,
                                             std::size_t runs, std::uint64_t seed,
                                             const IsolationOptions& options) {
  if (runs < 2) throw ParameterError("estimator needs at least two replicates");
  const auto start = std::chrono::steady_clock::now();
  const IsolationSampler sampler(params, tilt, options);
  const ModelParams& p = sampler.params();
  const Window receiver_disk = Window::disk(p.connection_radius());

  struct Sample {
    double value = 0.0;
    bool isolated = false;
  };
  const auto samples = run_indexed<Sample>(runs, options.workers, [&](std::size_t i) {
    std::vector<Point2> transmitters;
    const double log_w = sampler.sample(seed, i, transmitters);
    Rng rx_rng(derive_replicate_seed({seed, stream::kReceivers}, i));
    std::vector<Point2> receivers;
    append_homogeneous(receiver_disk, p.lambda_R, rx_rng, receivers);

    const InterferenceField field(transmitters, p);
    const double b2 = p.trunc_b * p.trunc_b;
    bool isolated = true;
    for (const Point2& y : receivers) {
      const FieldSum f = field.at(y);
      if (f.coincident > 0) continue;
      const double d2 = squared_norm(y);
      const double signal = d2 == 0.0 ? std::numeric_limits<double>::infinity()
                            : d2 < b2 ? path_loss(std::sqrt(d2), p.alpha, p.trunc_b)
                                      : 0.0;
      if (signal >= p.t * f.finite) {
        isolated = false;
        break;
      }
    }
    return Sample{isolated ? checked_exp(log_w) : 0.0, isolated};
  });

  std::vector<double> values(runs);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    values[i] = samples[i].value;
    hits += samples[i].isolated ? 1 : 0;
  }
  return make_report(values, hits, seed, start);
}

}  // namespace sinrmc
