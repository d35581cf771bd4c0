#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sinrmc::oracle {

/// N iid draws of sum_j |X_j|^-4 over a PPP(mu_T) on the disk of radius R
/// around the origin. Omitting the field beyond R biases the sum down by
/// pi mu_T / R^2 in mean.
std::vector<double> mc_interference_samples(double mu_T, double disk_radius, std::size_t n,
                                            std::uint64_t seed, int workers = 1);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Direct simulation of the connectable-receiver count of a transmitter at the
/// origin (alpha = 4, w = t = 1): interferers PPP(mu_T) on a disk of radius
/// disk_radius, receivers PPP(mu_R) on the unit disk, naive SINR loops.
McEstimate mc_expected_connect_count(double mu_R, double mu_T, std::size_t n,
                                     std::uint64_t seed, double disk_radius = 50.0,
                                     int workers = 1);

/// Grid argmin of isolation_objective(r, .) over lo, lo + step, ..., hi.
double brute_objective_min(double r, double lo = 1.0, double hi = 10.0, double step = 1e-3);

/// |int_0^1 erfc(c u / sqrt(1 - u^2)) du - erfcx(c)|, the integral taken by
/// Boost Gauss-Kronrod over the C library erfc.
double quad_identity_check(double c);

/// High-accuracy reference for 2 pi int_0^1 r P(r^-4 >= 1 + S(mu_T)) dr using
/// Boost quadrature and the C library erfc.
double reference_connect_count(double mu_R, double mu_T);

/// Median of S(mu_T) from the inverse complementary error function.
double interference_median(double mu_T);

/// Kolmogorov-Smirnov distance between the empirical law of `samples` and `cdf`.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

struct CheckResult {
  std::string name;
  double statistic = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct ValidationOptions {
  std::size_t interference_samples = 100000;
  std::size_t count_samples = 100000;
  double disk_radius = 50.0;
  std::uint64_t seed = 20240601;
  int workers = 1;
};

/// Every oracle cross-check; run before trusting the estimators.
std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

}  // namespace sinrmc::oracle
