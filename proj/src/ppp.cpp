#include "sinrmc/ppp.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "sinrmc/error.hpp"

namespace sinrmc {
namespace {

constexpr std::size_t kLogFactorialTable = 256;

double log_factorial(std::uint64_t k) {
  static const auto table = [] {
    std::array<double, kLogFactorialTable> t{};
    double acc = 0.0;
    for (std::size_t i = 1; i < kLogFactorialTable; ++i) {
      acc += std::log(static_cast<double>(i));
      t[i] = acc;
    }
    return t;
  }();
  if (k < kLogFactorialTable) return table[k];
  // Stirling series; error < 1e-17 relative for k >= 256.
  const double n = static_cast<double>(k);
  const double inv = 1.0 / n;
  const double inv2 = inv * inv;
  return (n + 0.5) * std::log(n) - n + 0.5 * std::log(2.0 * std::numbers::pi) +
         inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0));
}

std::uint64_t poisson_inversion(Rng& rng, double mean) {
  const double u = rng.uniform();
  double p = std::exp(-mean);
  double cdf = p;
  std::uint64_t k = 0;
  while (u > cdf && k < 1000) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
  }
  return k;
}

// Hormann (1993), "The transformed rejection method for generating Poisson
// random variables", algorithm PTRS.
std::uint64_t poisson_ptrs(Rng& rng, double mean) {
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    const auto ki = static_cast<std::uint64_t>(k);
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mean + k * loglam - log_factorial(ki)) {
      return ki;
    }
  }
}

Point2 uniform_point(const Window& window, Rng& rng) {
  const Point2 c = window.center();
  if (window.kind() == Window::Kind::kSquare) {
    const double s = window.side();
    const double x = c.x + s * (rng.uniform() - 0.5);
    const double y = c.y + s * (rng.uniform() - 0.5);
    return {x, y};
  }
  const double r = window.radius() * std::sqrt(rng.uniform());
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  return {c.x + r * std::cos(theta), c.y + r * std::sin(theta)};
}

}  // namespace

std::uint64_t sample_poisson(Rng& rng, double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) throw ParameterError("Poisson mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  return mean < 30.0 ? poisson_inversion(rng, mean) : poisson_ptrs(rng, mean);
}

void append_homogeneous(const Window& window, double intensity, Rng& rng,
                        std::vector<Point2>& out) {
  if (!(intensity >= 0.0) || !std::isfinite(intensity))
    throw ParameterError("intensity must be finite and nonnegative");
  const std::uint64_t count = sample_poisson(rng, intensity * window.area());
  out.reserve(out.size() + count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(uniform_point(window, rng));
}

PointPattern sample_homogeneous(const Window& window, double intensity, std::uint64_t seed,
                                PointLabel label) {
  Rng rng(seed);
  PointPattern pattern{{}, window, label};
  append_homogeneous(window, intensity, rng, pattern.points);
  return pattern;
}

void append_radial(const Window& disk, const RadialIntensity& profile, double radius_scale,
                   Rng& rng, std::vector<Point2>& out) {
  if (disk.kind() != Window::Kind::kDisk) throw ParameterError("radial sampling needs a disk window");
  if (!(radius_scale > 0.0) || !std::isfinite(radius_scale))
    throw ParameterError("radius scale must be positive");
  const double sup = profile.sup_value();
  if (sup == 0.0) return;
  const std::uint64_t count = sample_poisson(rng, sup * disk.area());
  const Point2 c = disk.center();
  for (std::uint64_t i = 0; i < count; ++i) {
    const Point2 p = uniform_point(disk, rng);
    const double accept = profile(distance(p, c) / radius_scale) / sup;
    if (rng.uniform() < accept) out.push_back(p);
  }
}

PointPattern sample_radial(const Window& disk, const RadialIntensity& profile,
                           double radius_scale, std::uint64_t seed, PointLabel label) {
  Rng rng(seed);
  PointPattern pattern{{}, disk, label};
  append_radial(disk, profile, radius_scale, rng, pattern.points);
  return pattern;
}

}  // namespace sinrmc
