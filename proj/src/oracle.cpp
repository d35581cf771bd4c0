#include "sinrmc/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "sinrmc/analytic.hpp"
#include "sinrmc/error.hpp"
#include "sinrmc/parallel.hpp"
#include "sinrmc/ppp.hpp"
#include "sinrmc/rng.hpp"
#include "sinrmc/tilt.hpp"

namespace sinrmc::oracle {
namespace {

constexpr double kPi = std::numbers::pi;

double gk_integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

}  // namespace

std::vector<double> mc_interference_samples(double mu_T, double disk_radius, std::size_t n,
                                            std::uint64_t seed, int workers) {
  if (!(mu_T >= 0.0)) throw ParameterError("mu_T must be >= 0");
  if (!(disk_radius >= 10.0)) throw ParameterError("oracle disk radius must be >= 10");
  const double r2max = disk_radius * disk_radius;
  const double mean_count = mu_T * kPi * r2max;
  return run_indexed<double>(n, workers, [&](std::size_t i) {
    Rng rng(derive_replicate_seed({seed, stream::kInterferers}, i));
    const std::uint64_t count = sample_poisson(rng, mean_count);
    double sum = 0.0;
    for (std::uint64_t k = 0; k < count; ++k) {
      // |X|^2 is uniform on (0, R^2] for a uniform point in the disk.
      const double d2 = r2max * rng.uniform_open();
      sum += 1.0 / (d2 * d2);
    }
    return sum;
  });
}

McEstimate mc_expected_connect_count(double mu_R, double mu_T, std::size_t n, std::uint64_t seed,
                                     double disk_radius, int workers) {
  if (!(mu_R >= 0.0) || !(mu_T >= 0.0)) throw ParameterError("intensities must be >= 0");
  if (n < 2) throw ParameterError("oracle needs at least two replicates");
  const Window interferer_disk = Window::disk(disk_radius);
  const Window receiver_disk = Window::disk(1.0);
  const auto counts = run_indexed<double>(n, workers, [&](std::size_t i) {
    Rng rx_rng(derive_replicate_seed({seed, stream::kReceivers}, i));
    std::vector<Point2> receivers;
    append_homogeneous(receiver_disk, mu_R, rx_rng, receivers);
    if (receivers.empty()) return 0.0;
    Rng tx_rng(derive_replicate_seed({seed, stream::kInterferers}, i));
    std::vector<Point2> interferers;
    append_homogeneous(interferer_disk, mu_T, tx_rng, interferers);
    double connected = 0.0;
    for (const Point2& y : receivers) {
      double interference = 1.0;
      for (const Point2& x : interferers) {
        const double dx = x.x - y.x;
        const double dy = x.y - y.y;
        const double d2 = dx * dx + dy * dy;
        interference += 1.0 / (d2 * d2);
      }
      const double r2 = y.x * y.x + y.y * y.y;
      const double signal = 1.0 / (r2 * r2);
      if (signal / interference >= 1.0) connected += 1.0;
    }
    return connected;
  });
  double sum = 0.0;
  for (double c : counts) sum += c;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double c : counts) ss += (c - mean) * (c - mean);
  const double var = ss / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

double brute_objective_min(double r, double lo, double hi, double step) {
  if (!(r > 0.0 && r < 1.0)) throw ParameterError("radius must lie in (0, 1)");
  const auto steps = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5));
  double best = lo;
  double best_value = isolation_objective(r, lo);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double lam = lo + static_cast<double>(k) * step;
    const double v = isolation_objective(r, lam);
    if (v < best_value) {
      best_value = v;
      best = lam;
    }
  }
  return best;
}

double quad_identity_check(double c) {
  if (!(c >= 0.0)) throw ParameterError("c must be >= 0");
  const double lhs = gk_integrate(
      [c](double u) {
        const double s = std::sqrt((1.0 - u) * (1.0 + u));
        return s == 0.0 ? 0.0 : std::erfc(c * u / s);
      },
      0.0, 1.0);
  if (c == 0.0) return std::abs(lhs - 1.0);
  return std::abs(lhs - sinrmc::erfcx(c));
}

double reference_connect_count(double mu_R, double mu_T) {
  const double scale = mu_T * std::pow(kPi, 1.5) / 2.0;
  const double integral = gk_integrate(
      [scale](double r) {
        if (r <= 0.0) return 0.0;
        const double excess = std::pow(r, -4.0) - 1.0;
        if (excess <= 0.0) return 0.0;
        return r * std::erfc(scale / std::sqrt(excess));
      },
      0.0, 1.0);
  return mu_R * 2.0 * kPi * integral;
}

double interference_median(double mu_T) {
  const double z = boost::math::erfc_inv(0.5);
  return mu_T * mu_T * kPi * kPi * kPi / (4.0 * z * z);
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw ParameterError("KS distance needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, double statistic, double bound) {
    out.push_back({std::move(name), statistic, bound, statistic < bound});
  };

  add("erfc(1) vs boost", std::abs(sinrmc::erfc(1.0) - boost::math::erfc(1.0)), 1e-13);
  for (double c : {0.0, 0.1, 0.5, 1.0, std::pow(kPi, 1.5) / 2.0, 5.0}) {
    char name[64];
    std::snprintf(name, sizeof name, "quadrature identity c=%.6g", c);
    add(name, quad_identity_check(c), 1e-8);
  }

  const double closed = expected_connect_count(1.0, 1.0);
  add("connect count closed vs reference quadrature",
      std::abs(closed - reference_connect_count(1.0, 1.0)), 1e-8);
  add("connect count closed vs internal quadrature",
      std::abs(closed - expected_connect_count_quad(1.0, 1.0)), 1e-8);
  add("connect count vs 0.601692", std::abs(closed - 0.601692), 1e-4);

  const auto samples = mc_interference_samples(1.0, options.disk_radius,
                                               options.interference_samples, options.seed,
                                               options.workers);
  add("interference KS distance",
      ks_distance(samples, [](double x) { return interference_cdf(x, 1.0); }), 0.01);
  {
    std::vector<double> sorted = samples;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double empirical_median = sorted[sorted.size() / 2];
    add("interference median CDF gap",
        std::abs(interference_cdf(empirical_median, 1.0) - 0.5), 0.01);
    add("interference median relative gap",
        std::abs(empirical_median / interference_median(1.0) - 1.0), 0.05);
  }

  const McEstimate mc = mc_expected_connect_count(1.0, 1.0, options.count_samples,
                                                  options.seed + 1, options.disk_radius,
                                                  options.workers);
  add("MC connect count z-score", std::abs(mc.mean - closed) / mc.std_error, 3.0);

  double worst_gap = 0.0;
  double worst_residual = 0.0;
  for (double r : {0.1, 0.3, 0.5, 0.5816, 0.7, 0.9}) {
    const double root = solve_lambda_opt(r, 1e-12);
    worst_gap = std::max(worst_gap, std::abs(root - brute_objective_min(r)));
    worst_residual = std::max(worst_residual, std::abs(stationarity_residual(r, root)));
  }
  add("lambda_opt vs brute-force argmin", worst_gap, 1e-3);
  add("lambda_opt stationarity residual", worst_residual, 1e-10);

  const IntensityPair pair = optimal_pair(0.5);
  add("optimal pair constraint residual",
      std::abs(expected_average_count(pair.mu_R, pair.mu_T) - 0.5), 1e-8);
  {
    // Lagrange condition: grad H parallel to grad C, checked by central differences.
    const double h = 1e-6;
    auto c = [](double r, double t) { return expected_average_count(r, t); };
    const double cr = (c(pair.mu_R + h, pair.mu_T) - c(pair.mu_R - h, pair.mu_T)) / (2 * h);
    const double ct = (c(pair.mu_R, pair.mu_T + h) - c(pair.mu_R, pair.mu_T - h)) / (2 * h);
    const double kappa = std::log(pair.mu_R) / cr;
    add("optimal pair Lagrange gradient", std::abs(std::log(pair.mu_T) - kappa * ct), 1e-5);
  }
  return out;
}

}  // namespace sinrmc::oracle
