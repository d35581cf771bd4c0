#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "sinrmc/geometry.hpp"

namespace sinrmc {

/// Uniform cell grid over a point set. Points are stored cell-sorted in
/// row-major order (structure of arrays), so the cells of one grid row that
/// intersect a query disk form one contiguous index range.
class CellIndex {
 public:
  CellIndex() = default;
  CellIndex(std::span<const Point2> points, double cell_size);

  std::size_t size() const { return xs_.size(); }
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }
  /// Original index of each sorted point.
  std::span<const std::uint32_t> ids() const { return ids_; }
  double cell_size() const { return cell_; }

  /// Calls f(begin, end) for sorted-index ranges covering every point within
  /// `radius` of `center` (and possibly a few more). An infinite radius
  /// yields one call over the whole set.
  template <class F>
  void for_each_row(Point2 center, double radius, F&& f) const {
    if (xs_.empty()) return;
    if (!std::isfinite(radius)) {
      f(std::size_t{0}, xs_.size());
      return;
    }
    const int iy0 = std::max(0, cell_of(center.y - radius - y0_));
    const int iy1 = std::min(ny_ - 1, cell_of(center.y + radius - y0_));
    for (int iy = iy0; iy <= iy1; ++iy) {
      const double row_lo = y0_ + iy * cell_;
      const double row_hi = row_lo + cell_;
      const double gap = center.y < row_lo ? row_lo - center.y
                         : center.y > row_hi ? center.y - row_hi
                                             : 0.0;
      if (gap > radius) continue;
      const double half = std::sqrt(radius * radius - gap * gap);
      const int ix0 = std::max(0, cell_of(center.x - half - x0_));
      const int ix1 = std::min(nx_ - 1, cell_of(center.x + half - x0_));
      if (ix0 > ix1) continue;
      const std::size_t row = static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx_);
      const std::size_t begin = cell_start_[row + static_cast<std::size_t>(ix0)];
      const std::size_t end = cell_start_[row + static_cast<std::size_t>(ix1) + 1];
      if (begin < end) f(begin, end);
    }
  }

 private:
  int cell_of(double offset) const {
    const double c = std::floor(offset / cell_);
    if (c < -1.0) return -1;
    if (c > 2.0e9) return 2000000000;
    return static_cast<int>(c);
  }

  double cell_ = 1.0;
  double x0_ = 0.0;
  double y0_ = 0.0;
  int nx_ = 0;
  int ny_ = 0;
  std::vector<std::uint32_t> cell_start_;
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<std::uint32_t> ids_;
};

}  // namespace sinrmc
