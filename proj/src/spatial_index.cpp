#include "sinrmc/spatial_index.hpp"

#include "sinrmc/error.hpp"

namespace sinrmc {

CellIndex::CellIndex(std::span<const Point2> points, double cell_size) : cell_(cell_size) {
  if (!(cell_size > 0.0) || !std::isfinite(cell_size))
    throw ParameterError("cell size must be positive and finite");
  const std::size_t n = points.size();
  if (n == 0) return;

  double x1 = points[0].x;
  double y1 = points[0].y;
  x0_ = x1;
  y0_ = y1;
  for (const Point2& p : points) {
    x0_ = std::min(x0_, p.x);
    y0_ = std::min(y0_, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  // Keep the grid O(n) in size for sparse or widely spread inputs.
  const double max_cells = 4.0 * static_cast<double>(n) + 1024.0;
  for (;;) {
    const double gx = std::floor((x1 - x0_) / cell_) + 1.0;
    const double gy = std::floor((y1 - y0_) / cell_) + 1.0;
    if (gx * gy <= max_cells) {
      nx_ = static_cast<int>(gx);
      ny_ = static_cast<int>(gy);
      break;
    }
    cell_ *= 2.0;
  }

  std::vector<std::uint32_t> cell(n);
  cell_start_.assign(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int ix = std::min(nx_ - 1, cell_of(points[i].x - x0_));
    const int iy = std::min(ny_ - 1, cell_of(points[i].y - y0_));
    cell[i] = static_cast<std::uint32_t>(iy * nx_ + ix);
    ++cell_start_[cell[i] + 1];
  }
  for (std::size_t c = 1; c < cell_start_.size(); ++c) cell_start_[c] += cell_start_[c - 1];

  xs_.resize(n);
  ys_.resize(n);
  ids_.resize(n);
  std::vector<std::uint32_t> cursor(cell_start_.begin(), cell_start_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t slot = cursor[cell[i]]++;
    xs_[slot] = points[i].x;
    ys_[slot] = points[i].y;
    ids_[slot] = static_cast<std::uint32_t>(i);
  }
}

}  // namespace sinrmc
