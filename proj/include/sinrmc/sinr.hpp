#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "sinrmc/geometry.hpp"
#include "sinrmc/spatial_index.hpp"

namespace sinrmc {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// Physical model: unit powers, no fading, path loss r^-alpha truncated at trunc_b.
struct ModelParams {
  double alpha = 4.0;
  double w = 1.0;
  double t = 1.0;
  double lambda_R = 1.0;
  double lambda_T = 1.0;
  double trunc_b = 20.0;  // kUnbounded disables truncation
  bool tail_compensation = true;

  /// Throws ParameterError on alpha <= 2, w <= 0, t <= 0, negative
  /// intensities or trunc_b <= 0.
  void validate() const;

  /// (w t)^(-1/alpha): SINR <= l(r)/w, so no receiver beyond this is connectable.
  double connection_radius() const;

  /// Mean interference from an intensity-lambda_T field beyond trunc_b:
  /// 2 pi lambda_T / ((alpha - 2) b^(alpha - 2)). Zero when disabled or unbounded.
  double tail_mean() const;
};

/// r^-alpha on (0, trunc_b), 0 for r >= trunc_b, +inf at r = 0.
double path_loss(double r, double alpha, double trunc_b = kUnbounded);

/// Interference-plus-noise split into the finite part (noise, tail mean and
/// all terms at positive distance) and the number of transmitters sitting
/// exactly on the evaluation point.
struct FieldSum {
  double finite = 0.0;
  int coincident = 0;

  double value() const {
    return coincident > 0 ? std::numeric_limits<double>::infinity() : finite;
  }
};

/// SINR from the serving signal and the total field that still includes it.
double sinr_from_field(double signal, FieldSum field);

/// Total-field evaluator over a fixed transmitter set. Sums only the
/// transmitters within trunc_b of the query point using a cell index.
class InterferenceField {
 public:
  InterferenceField(std::span<const Point2> transmitters, const ModelParams& params);

  FieldSum at(Point2 y) const;

  /// Sum of l_b over the transmitters in the index cells that meet the disk
  /// of `radius` around y: a subset of the terms of at(y), hence a lower bound
  /// on its interference part. +inf if a transmitter sits on y.
  double partial(Point2 y, double radius) const;

  /// Bounds on sum_j l_b(|X_j - y|) (noise and tail excluded) over all y in the box.
  /// `upper` is +inf when a transmitter lies inside the box.
  void box_bounds(const BoundingBox& box, double& lower, double& upper) const;

  double noise_floor() const { return noise_; }
  const ModelParams& params() const { return params_; }
  const CellIndex& index() const { return index_; }

 private:
  ModelParams params_;
  double noise_;
  CellIndex index_;
};

/// w + sum_j l_b(|X_j - y|) (+ tail mean when compensation is on).
double total_field(Point2 y, std::span<const Point2> transmitters, const ModelParams& params);

/// SINR of transmitter `serving` at location y; interference excludes the server.
double sinr(std::size_t serving, Point2 y, std::span<const Point2> transmitters,
            const ModelParams& params);

/// Indices of receivers with sinr >= t from transmitter `serving`.
std::vector<std::size_t> connectable_receivers(std::size_t serving,
                                               std::span<const Point2> transmitters,
                                               std::span<const Point2> receivers,
                                               const ModelParams& params);

enum class FunctionalKind { kAvgConnectCount, kIsolatedDensity };

struct ConnectionCounts {
  std::size_t transmitters = 0;  // inside the window
  std::size_t connections = 0;   // sum of #Y^(i) over those transmitters
  std::size_t isolated = 0;      // transmitters with no connectable receiver
};

ConnectionCounts count_connections(std::span<const Point2> transmitters,
                                   std::span<const Point2> receivers, const Window& window,
                                   const ModelParams& params);

/// Per-area statistic over the transmitters inside `window`; transmitters and
/// receivers outside the window still interfere and may be connected.
double evaluate_functional(std::span<const Point2> transmitters,
                           std::span<const Point2> receivers, const Window& window,
                           const ModelParams& params, FunctionalKind kind);

/// Midpoint-rule area of {y : l(|y|) >= t I(y)} for a server at the origin,
/// with cell centers k*grid_h covering the disk of radius connection_radius().
/// Number K of cells on each side of the origin cell (grid is (2K+1)^2).
long good_region_half_cells(double radius, double grid_h);

double good_region_area(std::span<const Point2> transmitters, const ModelParams& params,
                        double grid_h);

}  // namespace sinrmc
