#include "sinrmc/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

#include "sinrmc/error.hpp"

namespace sinrmc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative slack for block-level accept/reject decisions in the area
// quadrature; ties within it are resolved cell by cell.
constexpr double kDecisionSlack = 1e-9;

inline double loss_sq(double d2, double alpha) {
  if (alpha == 4.0) return 1.0 / (d2 * d2);
  return std::pow(d2, -0.5 * alpha);
}

inline double truncated_loss_sq(double d2, double alpha, double b2) {
  return d2 < b2 ? loss_sq(d2, alpha) : 0.0;
}

using Lanes = double __attribute__((vector_size(64)));

inline Lanes load_lanes(const double* p) {
  Lanes v;
  std::memcpy(&v, p, sizeof v);
  return v;
}

inline double lane_sum(Lanes a) {
  return ((a[0] + a[1]) + (a[2] + a[3])) + ((a[4] + a[5]) + (a[6] + a[7]));
}

// Sum of truncated path losses over a contiguous SoA range. Eight lanes with
// a fixed reduction order keep the result independent of the vector width.
// Four reciprocals share one division:
//   1/A + 1/B + 1/C + 1/D = ((A + B) CD + (C + D) AB) / (ABCD),
// with out-of-range terms masked in the numerator. A non-finite result
// (coincident point, underflowed denominator) sends the caller to the exact
// scalar path.
double range_loss_quartic(const double* xs, const double* ys, std::size_t n, Point2 y,
                          double b2) {
  auto quartic = [&](const double* px, const double* py, Lanes& q, Lanes& mask) {
    const Lanes dx = load_lanes(px) - y.x;
    const Lanes dy = load_lanes(py) - y.y;
    const Lanes d2 = dx * dx + dy * dy;
    q = d2 * d2;
    mask = d2 < b2 ? Lanes{} + 1.0 : Lanes{};
  };
  Lanes acc = {};
  std::size_t k = 0;
  for (; k + 32 <= n; k += 32) {
    Lanes qa, qb, qc, qd, ma, mb, mc, md;
    quartic(xs + k, ys + k, qa, ma);
    quartic(xs + k + 8, ys + k + 8, qb, mb);
    quartic(xs + k + 16, ys + k + 16, qc, mc);
    quartic(xs + k + 24, ys + k + 24, qd, md);
    const Lanes ab = qa * qb;
    const Lanes cd = qc * qd;
    const Lanes num = (ma * qb + mb * qa) * cd + (mc * qd + md * qc) * ab;
    acc += num / (ab * cd);
  }
  for (; k + 8 <= n; k += 8) {
    Lanes q, m;
    quartic(xs + k, ys + k, q, m);
    acc += m / q;
  }
  if (k < n) {
    // Pad the tail far away: q overflows to inf and the lane contributes 0
    // whether or not truncation is active.
    double tx[8];
    double ty[8];
    for (std::size_t l = 0; l < 8; ++l) {
      tx[l] = k + l < n ? xs[k + l] : y.x + 1e150;
      ty[l] = k + l < n ? ys[k + l] : y.y;
    }
    Lanes q, m;
    quartic(tx, ty, q, m);
    acc += m / q;
  }
  return lane_sum(acc);
}

double range_loss_general(const double* xs, const double* ys, std::size_t n, Point2 y,
                          double b2, double alpha) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dx = xs[k] - y.x;
    const double dy = ys[k] - y.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 < b2) acc += std::pow(d2, -0.5 * alpha);
  }
  return acc;
}

}  // namespace

void ModelParams::validate() const {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be > 2");
  if (!(w > 0.0) || !std::isfinite(w)) throw ParameterError("noise w must be > 0");
  if (!(t > 0.0) || !std::isfinite(t)) throw ParameterError("threshold t must be > 0");
  if (!(lambda_R >= 0.0) || !std::isfinite(lambda_R))
    throw ParameterError("lambda_R must be finite and >= 0");
  if (!(lambda_T >= 0.0) || !std::isfinite(lambda_T))
    throw ParameterError("lambda_T must be finite and >= 0");
  if (!(trunc_b > 0.0)) throw ParameterError("trunc_b must be > 0");
}

double ModelParams::connection_radius() const { return std::pow(w * t, -1.0 / alpha); }

double ModelParams::tail_mean() const {
  if (!tail_compensation || !std::isfinite(trunc_b)) return 0.0;
  return 2.0 * std::numbers::pi * lambda_T / ((alpha - 2.0) * std::pow(trunc_b, alpha - 2.0));
}

double path_loss(double r, double alpha, double trunc_b) {
  if (r == 0.0) return kInf;
  if (r >= trunc_b) return 0.0;
  return loss_sq(r * r, alpha);
}

double sinr_from_field(double signal, FieldSum field) {
  if (std::isinf(signal)) return field.coincident > 1 ? 0.0 : kInf;
  if (field.coincident > 0) return 0.0;
  return signal / (field.finite - signal);
}

InterferenceField::InterferenceField(std::span<const Point2> transmitters,
                                     const ModelParams& params)
    : params_(params), noise_(params.w + params.tail_mean()) {
  params_.validate();
  const double cell = std::isfinite(params_.trunc_b) ? params_.trunc_b / 4.0 : 1.0;
  index_ = CellIndex(transmitters, cell);
}

double InterferenceField::partial(Point2 y, double radius) const {
  const double b2 = params_.trunc_b * params_.trunc_b;
  const double* xs = index_.xs().data();
  const double* ys = index_.ys().data();
  double acc = 0.0;
  index_.for_each_row(y, std::min(radius, params_.trunc_b), [&](std::size_t begin, std::size_t end) {
    acc += params_.alpha == 4.0
               ? range_loss_quartic(xs + begin, ys + begin, end - begin, y, b2)
               : range_loss_general(xs + begin, ys + begin, end - begin, y, b2, params_.alpha);
  });
  return std::isnan(acc) ? kInf : acc;
}

FieldSum InterferenceField::at(Point2 y) const {
  const double b = params_.trunc_b;
  const double b2 = b * b;
  const double alpha = params_.alpha;
  const double* xs = index_.xs().data();
  const double* ys = index_.ys().data();
  double acc = 0.0;
  index_.for_each_row(y, b, [&](std::size_t begin, std::size_t end) {
    acc += alpha == 4.0 ? range_loss_quartic(xs + begin, ys + begin, end - begin, y, b2)
                        : range_loss_general(xs + begin, ys + begin, end - begin, y, b2, alpha);
  });
  FieldSum out{noise_ + acc, 0};
  if (std::isfinite(acc)) return out;

  // Rare path: some transmitter sits exactly on y.
  out.finite = noise_;
  index_.for_each_row(y, b, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double dx = xs[k] - y.x;
      const double dy = ys[k] - y.y;
      const double d2 = dx * dx + dy * dy;
      if (d2 == 0.0) {
        ++out.coincident;
      } else {
        out.finite += truncated_loss_sq(d2, alpha, b2);
      }
    }
  });
  return out;
}

void InterferenceField::box_bounds(const BoundingBox& box, double& lower, double& upper) const {
  const double b = params_.trunc_b;
  const double b2 = b * b;
  const double alpha = params_.alpha;
  const Point2 c{0.5 * (box.lo.x + box.hi.x), 0.5 * (box.lo.y + box.hi.y)};
  const double hx = 0.5 * (box.hi.x - box.lo.x);
  const double hy = 0.5 * (box.hi.y - box.lo.y);
  const double* xs = index_.xs().data();
  const double* ys = index_.ys().data();
  double lo = 0.0;
  double hi = 0.0;
  index_.for_each_row(c, b + std::hypot(hx, hy), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double ax = std::abs(xs[k] - c.x);
      const double ay = std::abs(ys[k] - c.y);
      const double nx = std::max(ax - hx, 0.0);
      const double ny = std::max(ay - hy, 0.0);
      const double fx = ax + hx;
      const double fy = ay + hy;
      const double near2 = nx * nx + ny * ny;
      const double far2 = fx * fx + fy * fy;
      lo += truncated_loss_sq(far2, alpha, b2);
      hi += near2 == 0.0 ? kInf : truncated_loss_sq(near2, alpha, b2);
    }
  });
  lower = lo;
  upper = hi;
}

double total_field(Point2 y, std::span<const Point2> transmitters, const ModelParams& params) {
  return InterferenceField(transmitters, params).at(y).value();
}

double sinr(std::size_t serving, Point2 y, std::span<const Point2> transmitters,
            const ModelParams& params) {
  if (serving >= transmitters.size()) throw ParameterError("serving index out of range");
  const InterferenceField field(transmitters, params);
  const Point2 d = transmitters[serving] - y;
  const double d2 = squared_norm(d);
  const double b2 = params.trunc_b * params.trunc_b;
  const double signal = d2 == 0.0 ? kInf : truncated_loss_sq(d2, params.alpha, b2);
  return sinr_from_field(signal, field.at(y));
}

namespace {

// Shared driver for the per-transmitter connection scans. Each receiver gets
// a cheap near-field lower bound first; many candidates are rejected by it
// alone. The exact field is evaluated at most once per receiver and cached.
class ConnectionScanner {
 public:
  static constexpr double kNearRadius = 2.5;

  ConnectionScanner(std::span<const Point2> transmitters, std::span<const Point2> receivers,
                    const ModelParams& params)
      : params_(params),
        field_(transmitters, params),
        receivers_(receivers),
        radius_(params.connection_radius()),
        index_(receivers, std::max(radius_, 1e-9)),
        state_(receivers.size(), kUnknown),
        near_(receivers.size()),
        fields_(receivers.size()) {}

  template <class F>
  void for_each_connected(Point2 server, F&& on_connect) {
    const double r2 = radius_ * radius_;
    const double b2 = params_.trunc_b * params_.trunc_b;
    const double* xs = index_.xs().data();
    const double* ys = index_.ys().data();
    const auto ids = index_.ids();
    index_.for_each_row(server, radius_, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const double dx = xs[k] - server.x;
        const double dy = ys[k] - server.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 > r2) continue;
        const std::uint32_t id = ids[k];
        const double signal = d2 == 0.0 ? kInf : truncated_loss_sq(d2, params_.alpha, b2);
        if (connected(id, signal)) on_connect(id);
      }
    });
  }

 private:
  enum State : std::uint8_t { kUnknown, kNear, kExact };

  bool connected(std::uint32_t id, double signal) {
    if (state_[id] == kUnknown) {
      near_[id] = field_.partial(receivers_[id], kNearRadius);
      state_[id] = kNear;
    }
    if (state_[id] == kNear && std::isfinite(signal) && std::isfinite(near_[id])) {
      // The exact field is at least noise + near, so this rejects safely.
      const double rest = field_.noise_floor() + near_[id] - signal;
      if (rest > 0.0 && signal < params_.t * rest * (1.0 - kDecisionSlack)) return false;
    }
    if (state_[id] != kExact) {
      fields_[id] = field_.at(receivers_[id]);
      state_[id] = kExact;
    }
    return sinr_from_field(signal, fields_[id]) >= params_.t;
  }

  ModelParams params_;
  InterferenceField field_;
  std::span<const Point2> receivers_;
  double radius_;
  CellIndex index_;
  std::vector<State> state_;
  std::vector<double> near_;
  std::vector<FieldSum> fields_;
};

}  // namespace

std::vector<std::size_t> connectable_receivers(std::size_t serving,
                                               std::span<const Point2> transmitters,
                                               std::span<const Point2> receivers,
                                               const ModelParams& params) {
  if (serving >= transmitters.size()) throw ParameterError("serving index out of range");
  std::vector<std::size_t> out;
  if (receivers.empty()) return out;
  ConnectionScanner scanner(transmitters, receivers, params);
  scanner.for_each_connected(transmitters[serving],
                             [&](std::uint32_t id) { out.push_back(id); });
  std::sort(out.begin(), out.end());
  return out;
}

ConnectionCounts count_connections(std::span<const Point2> transmitters,
                                   std::span<const Point2> receivers, const Window& window,
                                   const ModelParams& params) {
  ConnectionCounts counts;
  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < transmitters.size(); ++i) {
    if (window.contains(transmitters[i])) inside.push_back(i);
  }
  counts.transmitters = inside.size();
  if (inside.empty()) return counts;
  if (receivers.empty()) {
    counts.isolated = inside.size();
    return counts;
  }
  ConnectionScanner scanner(transmitters, receivers, params);
  for (std::size_t i : inside) {
    std::size_t mine = 0;
    scanner.for_each_connected(transmitters[i], [&](std::uint32_t) { ++mine; });
    counts.connections += mine;
    if (mine == 0) ++counts.isolated;
  }
  return counts;
}

double evaluate_functional(std::span<const Point2> transmitters,
                           std::span<const Point2> receivers, const Window& window,
                           const ModelParams& params, FunctionalKind kind) {
  const ConnectionCounts counts = count_connections(transmitters, receivers, window, params);
  const double n = kind == FunctionalKind::kAvgConnectCount
                       ? static_cast<double>(counts.connections)
                       : static_cast<double>(counts.isolated);
  return n / window.area();
}

namespace {

// Field bounds over one tile of the area grid. Transmitters within
// near_radius of the tile are kept and summed exactly. The smooth far field
// is replaced by its first-order expansion at the tile center, with the
// Hessian remainder bounded by 1/2 alpha (alpha + 1) d^(-alpha-2) |y - c|^2
// per point (d = smallest distance from the point to the tile). Points whose
// distance range straddles the truncation radius contribute [0, l(d)].
class TileField {
 public:
  void build_near(const InterferenceField& field, Point2 lo, Point2 hi, double reach) {
    center_ = {0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)};
    half_diag_ = 0.5 * std::hypot(hi.x - lo.x, hi.y - lo.y);
    near_radius_ = half_diag_ + reach;
    nx_.clear();
    ny_.clear();
    const CellIndex& index = field.index();
    const double* xs = index.xs().data();
    const double* ys = index.ys().data();
    const double r2 = near_radius_ * near_radius_;
    index.for_each_row(center_, near_radius_, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const double dx = xs[k] - center_.x;
        const double dy = ys[k] - center_.y;
        if (dx * dx + dy * dy <= r2) {
          nx_.push_back(xs[k]);
          ny_.push_back(ys[k]);
        }
      }
    });
  }

  void build_far(const InterferenceField& field) {
    const ModelParams& p = field.params();
    const double alpha = p.alpha;
    const double b = p.trunc_b;
    const CellIndex& index = field.index();
    const double* xs = index.xs().data();
    const double* ys = index.ys().data();
    const double r2 = near_radius_ * near_radius_;
    const double hd = half_diag_;
    const double hessian = 0.5 * alpha * (alpha + 1.0) * hd * hd;
    double f0 = 0.0, gx = 0.0, gy = 0.0, err = 0.0, cross = 0.0;
    index.for_each_row(center_, b + hd, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const double dx = xs[k] - center_.x;
        const double dy = ys[k] - center_.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 <= r2) continue;
        const double d = std::sqrt(d2);
        const double dmin = d - hd;
        if (dmin >= b) continue;
        const double lmin = loss_sq(dmin * dmin, alpha);
        if (d + hd >= b) {
          cross += lmin;
          continue;
        }
        const double l = loss_sq(d2, alpha);
        f0 += l;
        const double g = alpha * l / d2;
        gx += g * dx;
        gy += g * dy;
        err += hessian * lmin / (dmin * dmin);
      }
    });
    // Moving toward a transmitter raises its term: d/dy l(|x - y|) = alpha l (x - y) / d^2.
    f0_ = f0;
    gx_ = gx;
    gy_ = gy;
    cross_ = cross;
    // Rounding in the accumulated sums.
    err_ = err + 1e-11 * (f0 + cross + err + (std::abs(gx) + std::abs(gy)) * hd);
  }

  /// Bounds on the interference sum (noise excluded) over the box [lo, hi].
  void box(Point2 lo, Point2 hi, double b2, double alpha, double& lower, double& upper) const {
    const Point2 c{0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)};
    const double hx = 0.5 * (hi.x - lo.x);
    const double hy = 0.5 * (hi.y - lo.y);
    const double lin = f0_ + gx_ * (c.x - center_.x) + gy_ * (c.y - center_.y);
    const double spread = std::abs(gx_) * hx + std::abs(gy_) * hy;
    double nlo = 0.0, nhi = 0.0;
    for (std::size_t k = 0; k < nx_.size(); ++k) {
      const double ax = std::abs(nx_[k] - c.x);
      const double ay = std::abs(ny_[k] - c.y);
      const double ex = std::max(ax - hx, 0.0);
      const double ey = std::max(ay - hy, 0.0);
      const double fx = ax + hx;
      const double fy = ay + hy;
      const double near2 = ex * ex + ey * ey;
      nlo += truncated_loss_sq(fx * fx + fy * fy, alpha, b2);
      nhi += near2 == 0.0 ? kInf : truncated_loss_sq(near2, alpha, b2);
    }
    lower = nlo + std::max(0.0, lin - spread - err_);
    upper = nhi + lin + spread + err_ + cross_;
  }

  /// Bounds at a single point; sets `coincident` if a transmitter sits on y.
  void point(Point2 y, double b2, double alpha, double& lower, double& upper,
             bool& coincident) const {
    double near = 0.0;
    coincident = false;
    for (std::size_t k = 0; k < nx_.size(); ++k) {
      const double dx = nx_[k] - y.x;
      const double dy = ny_[k] - y.y;
      const double d2 = dx * dx + dy * dy;
      if (d2 == 0.0) {
        coincident = true;
        continue;
      }
      near += truncated_loss_sq(d2, alpha, b2);
    }
    const double lin = f0_ + gx_ * (y.x - center_.x) + gy_ * (y.y - center_.y);
    lower = near + std::max(0.0, lin - err_);
    upper = near + lin + err_ + cross_;
  }

 private:
  Point2 center_;
  double half_diag_ = 0.0;
  double near_radius_ = 0.0;
  std::vector<double> nx_;
  std::vector<double> ny_;
  double f0_ = 0.0;
  double gx_ = 0.0;
  double gy_ = 0.0;
  double err_ = 0.0;
  double cross_ = 0.0;
};

// Midpoint-rule cell count. The grid is cut into tiles; inside a tile,
// blocks are accepted or rejected wholesale from TileField bounds and split
// otherwise. Single cells whose bounds straddle the threshold are decided
// from the exact field sum, so the count equals the cell-by-cell result.
class GoodRegionCounter {
 public:
  static constexpr double kTileSide = 0.5;
  static constexpr double kNearReach = 3.0;

  GoodRegionCounter(const InterferenceField& field, double h)
      : field_(field),
        h_(h),
        t_(field.params().t),
        alpha_(field.params().alpha),
        b2_(field.params().trunc_b * field.params().trunc_b),
        noise_(field.noise_floor()),
        tile_cells_(std::max(1L, static_cast<long>(std::ceil(kTileSide / h)))) {}

  std::uint64_t count(long k) {
    std::uint64_t total = 0;
    for (long i0 = -k; i0 <= k; i0 += tile_cells_) {
      const long i1 = std::min(k, i0 + tile_cells_ - 1);
      for (long j0 = -k; j0 <= k; j0 += tile_cells_) {
        const long j1 = std::min(k, j0 + tile_cells_ - 1);
        total += count_tile(i0, i1, j0, j1);
      }
    }
    return total;
  }

 private:
  Point2 at(long i, long j) const {
    return {static_cast<double>(i) * h_, static_cast<double>(j) * h_};
  }

  // Signal range over the block of cell centers.
  void signal_range(Point2 lo, Point2 hi, double& smin, double& smax) const {
    const double nx = std::max({lo.x, -hi.x, 0.0});
    const double ny = std::max({lo.y, -hi.y, 0.0});
    const double fx = std::max(std::abs(lo.x), std::abs(hi.x));
    const double fy = std::max(std::abs(lo.y), std::abs(hi.y));
    const double near2 = nx * nx + ny * ny;
    const double far2 = fx * fx + fy * fy;
    smax = near2 == 0.0 ? kInf : truncated_loss_sq(near2, alpha_, b2_);
    smin = far2 == 0.0 ? kInf : truncated_loss_sq(far2, alpha_, b2_);
  }

  std::uint64_t count_tile(long i0, long i1, long j0, long j1) {
    const Point2 lo = at(i0, j0);
    const Point2 hi = at(i1, j1);
    double smin = 0.0, smax = 0.0;
    signal_range(lo, hi, smin, smax);
    if (smax < t_ * noise_ * (1.0 - kDecisionSlack)) return 0;
    tile_.build_near(field_, lo, hi, kNearReach);
    double lower = 0.0, upper = 0.0;
    // Near-only lower bound first: it needs no far-field pass.
    tile_.box(lo, hi, b2_, alpha_, lower, upper);
    if (smax < t_ * (noise_ + lower) * (1.0 - kDecisionSlack)) return 0;
    tile_.build_far(field_);
    return count_block(i0, i1, j0, j1);
  }

  std::uint64_t count_block(long i0, long i1, long j0, long j1) const {
    const Point2 lo = at(i0, j0);
    const Point2 hi = at(i1, j1);
    double smin = 0.0, smax = 0.0;
    signal_range(lo, hi, smin, smax);
    if (smax < t_ * noise_ * (1.0 - kDecisionSlack)) return 0;

    const auto cells = static_cast<std::uint64_t>((i1 - i0 + 1) * (j1 - j0 + 1));
    if (cells <= 2) {
      std::uint64_t n = 0;
      for (long i = i0; i <= i1; ++i) {
        for (long j = j0; j <= j1; ++j) n += connected(i, j) ? 1 : 0;
      }
      return n;
    }

    double lower = 0.0, upper = 0.0;
    tile_.box(lo, hi, b2_, alpha_, lower, upper);
    if (smax < t_ * (noise_ + lower) * (1.0 - kDecisionSlack)) return 0;
    if (std::isfinite(upper) && smin >= t_ * (noise_ + upper) * (1.0 + kDecisionSlack))
      return cells;

    if (i1 - i0 >= j1 - j0) {
      const long mid = i0 + (i1 - i0) / 2;
      return count_block(i0, mid, j0, j1) + count_block(mid + 1, i1, j0, j1);
    }
    const long mid = j0 + (j1 - j0) / 2;
    return count_block(i0, i1, j0, mid) + count_block(i0, i1, mid + 1, j1);
  }

  bool connected(long i, long j) const {
    const Point2 y = at(i, j);
    double lower = 0.0, upper = 0.0;
    bool coincident = false;
    tile_.point(y, b2_, alpha_, lower, upper, coincident);
    if (coincident) return false;
    const double d2 = squared_norm(y);
    if (d2 == 0.0) return true;
    const double signal = truncated_loss_sq(d2, alpha_, b2_);
    if (signal >= t_ * (noise_ + upper) * (1.0 + kDecisionSlack)) return true;
    if (signal < t_ * (noise_ + lower) * (1.0 - kDecisionSlack)) return false;
    return connected_exact(y);
  }

  bool connected_exact(Point2 y) const {
    const FieldSum f = field_.at(y);
    if (f.coincident > 0) return false;
    const double d2 = squared_norm(y);
    if (d2 == 0.0) return true;
    return truncated_loss_sq(d2, alpha_, b2_) >= t_ * f.finite;
  }

  const InterferenceField& field_;
  double h_;
  double t_;
  double alpha_;
  double b2_;
  double noise_;
  long tile_cells_;
  TileField tile_;
};

}  // namespace

long good_region_half_cells(double radius, double grid_h) {
  return static_cast<long>(std::ceil(radius / grid_h));
}

double good_region_area(std::span<const Point2> transmitters, const ModelParams& params,
                        double grid_h) {
  if (!(grid_h > 0.0) || !std::isfinite(grid_h)) throw ParameterError("grid_h must be > 0");
  params.validate();
  const long k = good_region_half_cells(params.connection_radius(), grid_h);
  const InterferenceField field(transmitters, params);
  GoodRegionCounter counter(field, grid_h);
  return static_cast<double>(counter.count(k)) * grid_h * grid_h;
}

}  // namespace sinrmc
