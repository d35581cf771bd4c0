#include "sinrmc/tilt.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "sinrmc/analytic.hpp"
#include "sinrmc/error.hpp"
#include "sinrmc/estimate.hpp"
#include "sinrmc/parallel.hpp"

namespace sinrmc {
namespace {

constexpr double kMuTLow = 1e-3;
constexpr double kMuTHigh = 10.0;
constexpr double kGoldenTol = 1e-8;
constexpr double kLambdaCap = 1024.0;

template <class F>
double golden_section_min(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

IntensityPair optimal_pair(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ParameterError("threshold a must be > 0");
  if (a >= expected_average_count(1.0, 1.0)) return {1.0, 1.0};

  // The entropy sum is strictly convex with its minimum at (1, 1), which is
  // infeasible here, so the optimum sits on the active constraint
  // mu_R * g(mu_T) = a with g(mu_T) = expected_average_count(1, mu_T).
  auto receiver_intensity = [a](double mu_T) { return a / expected_average_count(1.0, mu_T); };
  auto objective = [&](double mu_T) {
    return poisson_entropy(receiver_intensity(mu_T)) + poisson_entropy(mu_T);
  };
  const double mu_T = golden_section_min(objective, kMuTLow, kMuTHigh, kGoldenTol);
  return {receiver_intensity(mu_T), mu_T};
}

double solve_lambda_opt(double r, double tol) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be > 0");
  // The residual is increasing in lam and nonpositive at lam = 1.
  const double at_one = stationarity_residual(r, 1.0);
  if (at_one >= 0.0) return 1.0;
  double lo = 1.0;
  double hi = 2.0;
  while (stationarity_residual(r, hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > kLambdaCap) throw SolverError("no sign change of the stationarity residual");
  }
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double f = stationarity_residual(r, mid);
    if (std::abs(f) < tol || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * mid) break;
    (f < 0.0 ? lo : hi) = mid;
  }
  return mid;
}

RadialIntensity tabulate_lambda_profile(std::size_t m, double tol) {
  if (m < 2) throw ParameterError("profile needs at least two points");
  std::vector<double> grid(m);
  std::vector<double> values(m, 1.0);
  for (std::size_t k = 0; k < m; ++k) {
    grid[k] = static_cast<double>(k) / static_cast<double>(m - 1);
  }
  grid.back() = 1.0;
  for (std::size_t k = 1; k + 1 < m; ++k) values[k] = solve_lambda_opt(grid[k], tol);
  return RadialIntensity(std::move(grid), std::move(values));
}

void write_profile_csv(std::ostream& out, const RadialIntensity& profile) {
  out << "r,lambda\n";
  char buf[64];
  const auto grid = profile.grid();
  const auto values = profile.values();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid[k], values[k]);
    out << buf;
  }
}

PilotResult cross_entropy_pilot(const EventSpec& event, const ModelParams& params, double n,
                                std::size_t pilot_runs, std::uint64_t seed,
                                const EventOptions& options) {
  if (pilot_runs < 1) throw ParameterError("pilot needs at least one replicate");
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  const double margin = resolve_margin(params, options);
  const PairTilt base{params.lambda_R, params.lambda_T};
  const auto reps = run_indexed<EventReplicate>(pilot_runs, options.workers, [&](std::size_t i) {
    return simulate_event_replicate(event, params, n, margin, base, seed, i);
  });

  const double area = n * n;
  double sum_T = 0.0;
  double sum_R = 0.0;
  std::size_t hits = 0;
  std::vector<double> values(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    values[i] = reps[i].occurred ? 1.0 : 0.0;
    if (!reps[i].occurred) continue;
    ++hits;
    sum_T += static_cast<double>(reps[i].x_count_in) / area;
    sum_R += static_cast<double>(reps[i].y_count_in) / area;
  }
  if (hits == 0) throw NoHitsError("cross-entropy pilot: event never occurred");

  PilotResult out;
  out.tilt = {sum_R / static_cast<double>(hits), sum_T / static_cast<double>(hits)};
  out.pilot.n_runs = pilot_runs;
  out.pilot.hits = hits;
  out.pilot.master_seed = seed;
  if (values.size() >= 2) {
    const SampleStats s = summarize(values);
    out.pilot.estimate = s.mean;
    out.pilot.single_run_variance = s.variance;
    out.pilot.std_error = s.std_error;
  } else {
    out.pilot.estimate = values[0];
    out.pilot.single_run_variance = std::numeric_limits<double>::quiet_NaN();
    out.pilot.std_error = std::numeric_limits<double>::quiet_NaN();
  }
  out.pilot.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace sinrmc
