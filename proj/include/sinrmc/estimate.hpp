#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sinrmc/estimator_types.hpp"
#include "sinrmc/geometry.hpp"
#include "sinrmc/radial_intensity.hpp"
#include "sinrmc/sinr.hpp"
#include "sinrmc/tilt.hpp"

namespace sinrmc {

/// Natural log of the likelihood ratio dP_base / dP_tilted.
struct LogWeight {
  double log_w = 0.0;
};

/// Homogeneous pair tilt on a window of the given area, counts taken inside
/// the window only:
///   area (mu_R - base_R) + area (mu_T - base_T) - x ln(mu_T / base_T) - y ln(mu_R / base_R).
/// Throws WeightError when a tilted intensity is zero but its count is not.
LogWeight pair_log_weight(std::size_t x_count_in, std::size_t y_count_in, double area,
                          double mu_R, double mu_T, double base_R = 1.0, double base_T = 1.0);

/// Log-likelihood ratio for a radially tilted transmitter field on a disk of
/// radius window_radius >= scale around the origin. The intensity integral is
/// computed once at construction.
class RadialWeight {
 public:
  RadialWeight(RadialIntensity profile, double scale, double window_radius,
               double base_intensity = 1.0);

  LogWeight operator()(std::span<const Point2> transmitters) const;

  double intensity_integral() const { return integral_; }
  const RadialIntensity& profile() const { return profile_; }
  double scale() const { return scale_; }

 private:
  RadialIntensity profile_;
  double scale_;
  double integral_;
};

/// Convenience form of RadialWeight with window_radius = scale.
LogWeight radial_log_weight(std::span<const Point2> transmitters, const RadialIntensity& profile,
                            double scale);

/// Mean, unbiased variance and standard error in index order.
struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
};

/// Throws ParameterError for fewer than two values.
SampleStats summarize(std::span<const double> values);

/// One replicate of the windowed network: tilted intensities inside the
/// square of side n, base intensities in the surrounding margin.
struct EventReplicate {
  double functional = 0.0;
  std::size_t x_count_in = 0;
  std::size_t y_count_in = 0;
  bool occurred = false;
  double log_w = 0.0;
};

double resolve_margin(const ModelParams& params, const EventOptions& options);

EventReplicate simulate_event_replicate(const EventSpec& event, const ModelParams& params,
                                        double n, double margin, const PairTilt& tilt,
                                        std::uint64_t seed, std::uint64_t index);

/// Importance-sampling estimate of P(event); tilt must be NoTilt or PairTilt.
EstimatorReport estimate_event(const EventSpec& event, const ModelParams& params, double n,
                               const TiltSpec& tilt, std::size_t runs, std::uint64_t seed,
                               const EventOptions& options = {});

/// Conditional Monte Carlo estimate of the isolation probability of a
/// transmitter at the origin: each replicate contributes
/// exp(log_w - lambda_R * good_region_area). No receivers are sampled.
/// tilt must be NoTilt or RadialTilt.
EstimatorReport estimate_isolation(const ModelParams& params, const TiltSpec& tilt,
                                   std::size_t runs, double grid_h, std::uint64_t seed,
                                   const IsolationOptions& options = {});

/// Indicator counterpart of estimate_isolation: samples receivers on the
/// connection disk and scores 1{no receiver is connectable}. Uses the same
/// transmitter streams as estimate_isolation for a given seed.
EstimatorReport estimate_isolation_indicator(const ModelParams& params, const TiltSpec& tilt,
                                             std::size_t runs, std::uint64_t seed,
                                             const IsolationOptions& options = {});

/// Values above this log-weight are rejected as overflow.
inline constexpr double kMaxLogWeight = 700.0;

}  // namespace sinrmc
