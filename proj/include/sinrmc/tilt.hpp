#pragma once

#include <cstdint>
#include <iosfwd>
#include <variant>

#include "sinrmc/estimator_types.hpp"
#include "sinrmc/radial_intensity.hpp"
#include "sinrmc/sinr.hpp"

namespace sinrmc {

struct IntensityPair {
  double mu_R = 1.0;
  double mu_T = 1.0;
};

struct NoTilt {};
/// Homogeneous tilted intensities inside the observation window.
struct PairTilt {
  double mu_R = 1.0;
  double mu_T = 1.0;
};
/// Transmitter intensity lambda_T * profile(|x| / connection_radius()).
struct RadialTilt {
  RadialIntensity profile = RadialIntensity::constant(1.0);
};

using TiltSpec = std::variant<NoTilt, PairTilt, RadialTilt>;

/// Entropy-minimal homogeneous Poisson pair whose expected average connect
/// count equals a (alpha = 4, w = t = 1). Returns (1, 1) when the untilted
/// expectation is already <= a. Throws ParameterError for a <= 0.
IntensityPair optimal_pair(double a);

/// Minimizer over lam of isolation_objective(r, lam), the unique root of
/// stationarity_residual(r, .) in [1, 1024]. Throws SolverError if the
/// residual never changes sign.
double solve_lambda_opt(double r, double tol = 1e-12);

/// lambda_opt on m uniformly spaced radii over [0, 1]; both endpoints are 1.
RadialIntensity tabulate_lambda_profile(std::size_t m, double tol = 1e-12);

/// CSV with header "r,lambda" and 17 significant digits.
void write_profile_csv(std::ostream& out, const RadialIntensity& profile);

struct PilotResult {
  IntensityPair tilt;           // conditional mean intensities given the event
  EstimatorReport pilot;        // the untilted pilot estimate itself
};

/// Cross-entropy pilot: runs pilot_runs untilted replicates and averages the
/// observed intensities #X/|window|, #Y/|window| over the replicates in which
/// the event occurs. Throws NoHitsError when it never occurs.
PilotResult cross_entropy_pilot(const EventSpec& event, const ModelParams& params, double n,
                                std::size_t pilot_runs, std::uint64_t seed,
                                const EventOptions& options = {});

}  // namespace sinrmc
