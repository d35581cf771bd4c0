#pragma once

#include <span>
#include <vector>

namespace sinrmc {

/// Tabulated radial intensity profile r in [0, 1] -> lambda(r), linearly
/// interpolated between grid nodes and held at lambda(1) for r > 1.
class RadialIntensity {
 public:
  /// grid must start at 0, end at 1 and be strictly increasing; values must be
  /// finite and nonnegative. Throws ParameterError otherwise.
  RadialIntensity(std::vector<double> grid, std::vector<double> values);

  static RadialIntensity constant(double value);

  double operator()(double r) const;

  std::span<const double> grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double sup_value() const { return sup_; }
  double boundary_value() const { return values_.back(); }

  /// Exact integral of r * lambda(r) over [0, 1] for the piecewise-linear profile.
  double radial_moment() const;

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
  double sup_ = 0.0;
};

}  // namespace sinrmc
