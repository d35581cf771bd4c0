#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace sinrmc {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double squared_norm(Point2 p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

struct BoundingBox {
  Point2 lo;
  Point2 hi;
};

/// Closed sampling window: an axis-aligned square (side `size`) or a disk
/// (radius `size`), both centered at `center`.
class Window {
 public:
  enum class Kind { kSquare, kDisk };

  /// Throws ParameterError unless side > 0 and finite.
  static Window square(double side, Point2 center = {});
  /// Throws ParameterError unless radius > 0 and finite.
  static Window disk(double radius, Point2 center = {});

  Kind kind() const { return kind_; }
  Point2 center() const { return center_; }
  double side() const { return size_; }    // squares
  double radius() const { return size_; }  // disks

  double area() const {
    return kind_ == Kind::kSquare ? size_ * size_ : std::numbers::pi * size_ * size_;
  }
  bool contains(Point2 p) const;
  BoundingBox bounds() const;
  Window translated(Point2 shift) const;

 private:
  Window(Kind kind, double size, Point2 center) : kind_(kind), size_(size), center_(center) {}

  Kind kind_;
  double size_;
  Point2 center_;
};

enum class PointLabel { kTransmitter, kReceiver };

struct PointPattern {
  std::vector<Point2> points;
  Window window = Window::square(1.0);
  PointLabel label = PointLabel::kTransmitter;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

}  // namespace sinrmc
