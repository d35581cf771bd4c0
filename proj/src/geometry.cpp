#include "sinrmc/geometry.hpp"

#include "sinrmc/error.hpp"

namespace sinrmc {

Window Window::square(double side, Point2 center) {
  if (!(side > 0.0) || !std::isfinite(side)) throw ParameterError("square side must be positive");
  if (!center.finite()) throw ParameterError("window center must be finite");
  return Window(Kind::kSquare, side, center);
}

Window Window::disk(double radius, Point2 center) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw ParameterError("disk radius must be positive");
  if (!center.finite()) throw ParameterError("window center must be finite");
  return Window(Kind::kDisk, radius, center);
}

bool Window::contains(Point2 p) const {
  const Point2 d = p - center_;
  if (kind_ == Kind::kSquare) {
    const double half = 0.5 * size_;
    return std::abs(d.x) <= half && std::abs(d.y) <= half;
  }
  return squared_norm(d) <= size_ * size_;
}

BoundingBox Window::bounds() const {
  const double half = kind_ == Kind::kSquare ? 0.5 * size_ : size_;
  return {{center_.x - half, center_.y - half}, {center_.x + half, center_.y + half}};
}

Window Window::translated(Point2 shift) const { return Window(kind_, size_, center_ + shift); }

}  // namespace sinrmc
