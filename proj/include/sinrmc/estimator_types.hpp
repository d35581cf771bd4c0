#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include "sinrmc/sinr.hpp"

namespace sinrmc {

enum class Comparison { kLess, kGreater };

/// Event {functional <comparison> threshold}; low average connectivity is
/// {kAvgConnectCount, kLess, a}.
struct EventSpec {
  FunctionalKind functional = FunctionalKind::kAvgConnectCount;
  Comparison comparison = Comparison::kLess;
  double threshold = 0.5;

  bool occurs(double value) const {
    return comparison == Comparison::kLess ? value < threshold : value > threshold;
  }
};

struct EstimatorReport {
  std::size_t n_runs = 0;
  double estimate = 0.0;
  /// Unbiased sample variance of the per-replicate values.
  double single_run_variance = 0.0;
  double std_error = 0.0;
  std::size_t hits = 0;
  std::uint64_t master_seed = 0;
  double wall_seconds = 0.0;
};

struct EventOptions {
  int workers = 1;
  /// Margin width around the observation square; defaults to
  /// connection_radius() + trunc_b (connection_radius() alone when unbounded).
  std::optional<double> margin;
};

struct IsolationOptions {
  int workers = 1;
  /// Transmitters are sampled on the disk of this radius around the origin.
  double outer_radius = 35.0;
};

inline constexpr double kNoThreshold = std::numeric_limits<double>::infinity();

}  // namespace sinrmc
