#include "sinrmc/radial_intensity.hpp"

#include <algorithm>
#include <cmath>

#include "sinrmc/error.hpp"

namespace sinrmc {

RadialIntensity::RadialIntensity(std::vector<double> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (grid_.size() < 2 || grid_.size() != values_.size())
    throw ParameterError("radial profile needs at least two nodes and matching value count");
  if (grid_.front() != 0.0 || grid_.back() != 1.0)
    throw ParameterError("radial profile grid must span [0, 1]");
  for (std::size_t k = 1; k < grid_.size(); ++k) {
    if (!(grid_[k] > grid_[k - 1])) throw ParameterError("radial profile grid must be increasing");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ParameterError("radial profile values must be finite");
    if (v < 0.0) throw ParameterError("radial profile values must be nonnegative");
  }
  sup_ = *std::max_element(values_.begin(), values_.end());
}

RadialIntensity RadialIntensity::constant(double value) {
  return RadialIntensity({0.0, 1.0}, {value, value});
}

double RadialIntensity::operator()(double r) const {
  if (r >= 1.0) return values_.back();
  if (r <= 0.0) return values_.front();
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), r);
  const auto k = static_cast<std::size_t>(it - grid_.begin());
  const double r0 = grid_[k - 1];
  const double r1 = grid_[k];
  const double s = (r - r0) / (r1 - r0);
  return values_[k - 1] + s * (values_[k] - values_[k - 1]);
}

double RadialIntensity::radial_moment() const {
  // On [a, b] with lambda linear from u to v:
  // int r lambda dr = (b - a) * (u (2a + b) + v (a + 2b)) / 6.
  double total = 0.0;
  for (std::size_t k = 1; k < grid_.size(); ++k) {
    const double a = grid_[k - 1];
    const double b = grid_[k];
    total += (b - a) * (values_[k - 1] * (2.0 * a + b) + values_[k] * (a + 2.0 * b)) / 6.0;
  }
  return total;
}

}  // namespace sinrmc
