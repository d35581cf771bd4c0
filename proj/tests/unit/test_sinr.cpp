#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sinrmc/analytic.hpp"
#include "sinrmc/error.hpp"
#include "sinrmc/ppp.hpp"
#include "sinrmc/rng.hpp"
#include "sinrmc/sinr.hpp"

using namespace sinrmc;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Point2> random_points(Rng& rng, std::size_t n, double half) {
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {(2.0 * rng.uniform() - 1.0) * half, (2.0 * rng.uniform() - 1.0) * half};
  return pts;
}

// Naive reference implementations, written straight from the definitions.
long double naive_loss(Point2 a, Point2 b, const ModelParams& m) {
  const long double dx = static_cast<long double>(a.x) - b.x;
  const long double dy = static_cast<long double>(a.y) - b.y;
  const long double r = std::sqrt(dx * dx + dy * dy);
  if (r >= m.trunc_b) return 0.0L;
  return std::pow(r, -static_cast<long double>(m.alpha));
}

long double naive_tail(const ModelParams& m) {
  if (!m.tail_compensation || !std::isfinite(m.trunc_b)) return 0.0L;
  return 2.0L * std::numbers::pi_v<long double> * m.lambda_T /
         ((m.alpha - 2.0L) * std::pow(static_cast<long double>(m.trunc_b), m.alpha - 2.0L));
}

long double naive_sinr(std::size_t i, Point2 y, const std::vector<Point2>& tx, const ModelParams& m) {
  long double interference = m.w + naive_tail(m);
  for (std::size_t j = 0; j < tx.size(); ++j) {
    if (j != i) interference += naive_loss(tx[j], y, m);
  }
  return naive_loss(tx[i], y, m) / interference;
}

std::vector<std::size_t> brute_connectable(std::size_t i, const std::vector<Point2>& tx,
                                           const std::vector<Point2>& rx, const ModelParams& m) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rx.size(); ++k) {
    if (naive_sinr(i, rx[k], tx, m) >= m.t) out.push_back(k);
  }
  return out;
}

// Exhaustive per-cell evaluation of the good region.
long brute_good_cells(const std::vector<Point2>& tx, const ModelParams& m, double h) {
  const long k = good_region_half_cells(m.connection_radius(), h);
  long count = 0;
  for (long i = -k; i <= k; ++i) {
    for (long j = -k; j <= k; ++j) {
      const Point2 y{static_cast<double>(i) * h, static_cast<double>(j) * h};
      const double r2 = squared_norm(y);
      const double signal = r2 == 0.0 ? INFINITY : std::pow(r2, -m.alpha / 2.0);
      double interference = m.w + m.tail_mean();
      bool blocked = false;
      for (const Point2& x : tx) {
        const double d = distance(x, y);
        if (d == 0.0) blocked = true;
        if (d < m.trunc_b) interference += std::pow(d, -m.alpha);
      }
      if (!blocked && signal >= m.t * interference) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("sinr") {

TEST_CASE("model parameter validation") {
  ModelParams m;
  CHECK_NOTHROW(m.validate());
  using Mutator = void (*)(ModelParams&);
  for (Mutator bad : std::initializer_list<Mutator>{[](ModelParams& p) { p.alpha = 2.0; }, [](ModelParams& p) { p.w = 0.0; },
                   [](ModelParams& p) { p.t = -1.0; }, [](ModelParams& p) { p.lambda_R = -0.1; },
                   [](ModelParams& p) { p.lambda_T = -1.0; }, [](ModelParams& p) { p.trunc_b = 0.0; },
                   [](ModelParams& p) { p.alpha = std::nan(""); }}) {
    ModelParams p;
    bad(p);
    CHECK_THROWS_AS(p.validate(), ParameterError);
  }
  m.t = 0.002;
  CHECK(m.connection_radius() == doctest::Approx(std::pow(0.002, -0.25)));
  m.w = 2.0;
  m.t = 0.5;
  CHECK(m.connection_radius() == doctest::Approx(1.0));
  CHECK(ModelParams{}.tail_mean() == doctest::Approx(2.0 * kPi / (2.0 * 400.0)));
  ModelParams off;
  off.tail_compensation = false;
  CHECK(off.tail_mean() == 0.0);
  off.tail_compensation = true;
  off.trunc_b = kUnbounded;
  CHECK(off.tail_mean() == 0.0);
}

TEST_CASE("path loss") {
  CHECK(path_loss(1.0, 4.0) == 1.0);
  CHECK(path_loss(2.0, 4.0) == 0.0625);
  CHECK(path_loss(20.0, 4.0, 20.0) == 0.0);
  CHECK(path_loss(19.999, 4.0, 20.0) > 0.0);
  CHECK(std::isinf(path_loss(0.0, 4.0)));
  CHECK(path_loss(3.0, 3.0) == doctest::Approx(1.0 / 27.0).epsilon(1e-15));
  CHECK(path_loss(0.7, 4.0) == doctest::Approx(std::pow(0.7, -4.0)).epsilon(1e-15));
}

TEST_CASE("total field") {
  ModelParams m;
  m.trunc_b = kUnbounded;
  CHECK(total_field({0, 0}, {}, m) == 1.0);
  const std::vector<Point2> one = {{1.0, 0.0}};
  CHECK(total_field({0, 0}, one, m) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::isinf(total_field({1.0, 0.0}, one, m)));

  Rng rng(21);
  for (double b : {kUnbounded, 20.0, 3.0}) {
    for (double alpha : {4.0, 3.0, 5.5}) {
      ModelParams p;
      p.trunc_b = b;
      p.alpha = alpha;
      for (int rep = 0; rep < 50; ++rep) {
        const auto tx = random_points(rng, 20, 6.0);
        const Point2 y{rng.uniform() * 4 - 2, rng.uniform() * 4 - 2};
        long double ref = p.w + naive_tail(p);
        for (const Point2& x : tx) ref += naive_loss(x, y, p);
        CHECK(total_field(y, tx, p) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("sinr examples") {
  ModelParams m;
  m.trunc_b = kUnbounded;
  const std::vector<Point2> single = {{std::pow(2.0, 0.25), 0.0}};
  CHECK(sinr(0, {0, 0}, single, m) == doctest::Approx(0.5).epsilon(1e-14));
  const std::vector<Point2> pair = {{1.0, 0.0}, {0.0, -1.0}};
  CHECK(sinr(0, {0, 0}, pair, m) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::isinf(sinr(0, {1.0, 0.0}, pair, m)));
  CHECK(sinr(1, {1.0, 0.0}, pair, m) == 0.0);
  CHECK_THROWS_AS(sinr(2, {0, 0}, pair, m), ParameterError);
}

TEST_CASE("sinr matches the direct interference sum") {
  Rng rng(22);
  ModelParams m;
  for (int rep = 0; rep < 300; ++rep) {
    const auto tx = random_points(rng, 30, 5.0);
    Point2 y = {rng.uniform() * 6 - 3, rng.uniform() * 6 - 3};
    const std::size_t i = rng() % tx.size();
    if (distance(tx[i], y) < 0.5) continue;
    CHECK(sinr(i, y, tx, m) == doctest::Approx(static_cast<double>(naive_sinr(i, y, tx, m))).epsilon(1e-12));
  }
}

TEST_CASE("connectable receivers") {
  ModelParams m;
  const std::vector<Point2> tx = {{0, 0}};
  CHECK(connectable_receivers(0, tx, {}, m).empty());
  // Beyond (w t)^(-1/alpha) = 1: excluded even without interferers.
  const std::vector<Point2> far = {{1.01, 0.0}, {0.99, 0.0}};
  CHECK(connectable_receivers(0, tx, far, m) == std::vector<std::size_t>{1});

  Rng rng(23);
  for (int rep = 0; rep < 50; ++rep) {
    const auto t50 = random_points(rng, 50, 3.0);
    const auto r50 = random_points(rng, 50, 3.0);
    for (std::size_t i = 0; i < t50.size(); ++i) {
      REQUIRE(connectable_receivers(i, t50, r50, m) == brute_connectable(i, t50, r50, m));
    }
  }
}

TEST_CASE("cell index agrees with the exhaustive pairwise computation") {
  Rng rng(24);
  for (int rep = 0; rep < 200; ++rep) {
    ModelParams m;
    m.t = 0.05 + 2.0 * rng.uniform();
    m.trunc_b = rep % 3 == 0 ? kUnbounded : 1.0 + 5.0 * rng.uniform();
    const std::size_t ntx = rng() % 60;
    const auto tx = random_points(rng, ntx, 1.0 + 4.0 * rng.uniform());
    const auto rx = random_points(rng, 100 - ntx, 3.0);
    const Window win = Window::square(4.0);
    std::size_t connections = 0, inside = 0, isolated = 0;
    for (std::size_t i = 0; i < tx.size(); ++i) {
      const auto fast = connectable_receivers(i, tx, rx, m);
      const auto slow = brute_connectable(i, tx, rx, m);
      REQUIRE(fast == slow);
      if (win.contains(tx[i])) {
        ++inside;
        connections += slow.size();
        isolated += slow.empty() ? 1 : 0;
      }
    }
    const ConnectionCounts c = count_connections(tx, rx, win, m);
    CHECK(c.transmitters == inside);
    CHECK(c.connections == connections);
    CHECK(c.isolated == isolated);
    CHECK(evaluate_functional(tx, rx, win, m, FunctionalKind::kAvgConnectCount) ==
          doctest::Approx(connections / 16.0).epsilon(1e-15));
    CHECK(evaluate_functional(tx, rx, win, m, FunctionalKind::kIsolatedDensity) ==
          doctest::Approx(isolated / 16.0).epsilon(1e-15));
  }
}

TEST_CASE("coincident points") {
  ModelParams m;
  const std::vector<Point2> tx = {{0, 0}, {2, 0}};
  const std::vector<Point2> rx = {{0, 0}, {2, 0}, {0.5, 0}};
  CHECK(connectable_receivers(0, tx, rx, m) == std::vector<std::size_t>{0, 2});
  CHECK(connectable_receivers(1, tx, rx, m) == std::vector<std::size_t>{1});
}

TEST_CASE("functional examples") {
  ModelParams m;
  const Window win = Window::square(25.0);
  const std::vector<Point2> outside = {{20.0, 0.0}};
  const std::vector<Point2> rx = {{0.5, 0.0}, {20.2, 0.0}};
  CHECK(evaluate_functional({}, rx, win, m, FunctionalKind::kAvgConnectCount) == 0.0);
  CHECK(evaluate_functional(outside, rx, win, m, FunctionalKind::kAvgConnectCount) == 0.0);
  CHECK(evaluate_functional(outside, rx, win, m, FunctionalKind::kIsolatedDensity) == 0.0);
  ModelParams pure = m;
  pure.trunc_b = kUnbounded;
  const std::vector<Point2> tx = {{0.0, 0.0}};
  const std::vector<Point2> near_rx = {{0.5, 0.0}};
  CHECK(evaluate_functional(tx, near_rx, win, pure, FunctionalKind::kAvgConnectCount) == 1.0 / 625.0);
  CHECK(evaluate_functional(tx, {}, win, pure, FunctionalKind::kIsolatedDensity) == 1.0 / 625.0);
  // Receivers outside the window may still be connected to inside transmitters.
  const std::vector<Point2> edge_tx = {{12.4, 0.0}};
  const std::vector<Point2> edge_rx = {{12.9, 0.0}};
  CHECK(evaluate_functional(edge_tx, edge_rx, win, pure, FunctionalKind::kAvgConnectCount) == 1.0 / 625.0);
}

TEST_CASE("replicate mean of the average connection count") {
  ModelParams m;
  const Window win = Window::square(25.0);
  const double margin = m.connection_radius() + m.trunc_b;
  const Window sampling = Window::square(25.0 + 2.0 * margin);
  constexpr int kN = 10000;
  double s = 0.0, ss = 0.0;
  for (int i = 0; i < kN; ++i) {
    const auto tx = sample_homogeneous(sampling, 1.0, derive_replicate_seed({31, stream::kTransmitters}, i));
    const auto rx = sample_homogeneous(sampling, 1.0, derive_replicate_seed({31, stream::kReceivers}, i));
    const double v = evaluate_functional(tx.points, rx.points, win, m, FunctionalKind::kAvgConnectCount);
    s += v;
    ss += v * v;
  }
  const double mean = s / kN;
  const double se = std::sqrt((ss / kN - mean * mean) / (kN - 1));
  const double expected = expected_connect_count(1.0, 1.0);
  MESSAGE("replicate mean " << mean << " se " << se << " expected " << expected);
  CHECK(std::abs(mean - expected) < 3.0 * se);
}

TEST_CASE("adding a transmitter never raises another's sinr") {
  Rng rng(25);
  ModelParams m;
  for (int rep = 0; rep < 200; ++rep) {
    auto tx = random_points(rng, 15, 4.0);
    const auto ys = random_points(rng, 10, 4.0);
    std::vector<double> before;
    for (const Point2& y : ys) before.push_back(sinr(0, y, tx, m));
    tx.push_back({rng.uniform() * 8 - 4, rng.uniform() * 8 - 4});
    for (std::size_t k = 0; k < ys.size(); ++k) REQUIRE(sinr(0, ys[k], tx, m) <= before[k]);
  }
}

TEST_CASE("good region shrinks when interferers are added") {
  Rng rng(26);
  ModelParams m;
  m.t = 0.05;
  for (int rep = 0; rep < 40; ++rep) {
    auto tx = random_points(rng, 5, 5.0);
    const double a0 = good_region_area(tx, m, 0.05);
    tx.push_back({rng.uniform() * 6 - 3, rng.uniform() * 6 - 3});
    CHECK(good_region_area(tx, m, 0.05) <= a0);
  }
}

TEST_CASE("translation invariance") {
  Rng rng(27);
  ModelParams m;
  m.t = 0.3;
  const Point2 shift{10.5, -3.25};
  for (int rep = 0; rep < 50; ++rep) {
    auto tx = random_points(rng, 80, 5.0);
    auto rx = random_points(rng, 80, 5.0);
    const Window win = Window::square(6.0);
    const double a = evaluate_functional(tx, rx, win, m, FunctionalKind::kAvgConnectCount);
    const double b = evaluate_functional(tx, rx, win, m, FunctionalKind::kIsolatedDensity);
    for (auto& p : tx) p = p + shift;
    for (auto& p : rx) p = p + shift;
    const Window moved = win.translated(shift);
    CHECK(evaluate_functional(tx, rx, moved, m, FunctionalKind::kAvgConnectCount) == doctest::Approx(a).epsilon(1e-12));
    CHECK(evaluate_functional(tx, rx, moved, m, FunctionalKind::kIsolatedDensity) == doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("good region without interferers is the connection disk") {
  ModelParams m;
  m.t = 0.002;
  m.trunc_b = kUnbounded;
  const double exact = kPi / std::sqrt(m.t);
  const double coarse = good_region_area({}, m, 0.05);
  const double fine = good_region_area({}, m, 0.025);
  CHECK(std::abs(coarse - exact) < 0.01 * exact);
  CHECK(std::abs(fine - exact) < 0.01 * exact);
  CHECK(std::abs(coarse - fine) < 0.02 * fine);
  CHECK_THROWS_AS(good_region_area({}, m, 0.0), ParameterError);
  CHECK_THROWS_AS(good_region_area({}, m, -0.1), ParameterError);
}

TEST_CASE("degenerate single-cell good region") {
  ModelParams m;
  m.t = 1e6;  // radius 1/sqrt(1000) < h
  const double h = 0.05;
  const double area = good_region_area({}, m, h);
  CHECK((area == 0.0 || area == doctest::Approx(h * h)));
}

TEST_CASE("a truncated far interferer does not change the good region") {
  ModelParams m;
  m.t = 0.002;
  m.trunc_b = 20.0;
  const double base = good_region_area({}, m, 0.05);
  const std::vector<Point2> far = {{60.0, 0.0}};
  CHECK(good_region_area(far, m, 0.05) == base);
}

TEST_CASE("tiled good region equals per-cell evaluation") {
  Rng rng(28);
  for (int rep = 0; rep < 30; ++rep) {
    ModelParams m;
    m.t = rep % 2 == 0 ? 0.02 : 0.2;
    m.trunc_b = rep % 3 == 0 ? kUnbounded : 20.0;
    m.alpha = rep % 5 == 0 ? 3.0 : 4.0;
    const double r = m.connection_radius();
    auto tx = random_points(rng, 2 + rng() % 25, r * 1.5);
    if (rep == 7) tx.push_back({0.1, 0.0});  // lands on a cell center
    const double h = 0.05;
    CHECK(good_region_area(tx, m, h) == doctest::Approx(brute_good_cells(tx, m, h) * h * h).epsilon(1e-12));
  }
}

TEST_CASE("grid convergence on random interferer sets") {
  Rng rng(29);
  ModelParams m;
  m.t = 0.002;
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const auto tx = random_points(rng, 10, 8.0);
    const double a = good_region_area(tx, m, 0.05);
    const double b = good_region_area(tx, m, 0.025);
    if (b > 0) worst = std::max(worst, std::abs(a - b) / b);
  }
  MESSAGE("largest relative change from halving grid_h: " << worst);
}

TEST_CASE("field bounds bracket point evaluations") {
  Rng rng(30);
  ModelParams m;
  const auto tx = random_points(rng, 400, 15.0);
  const InterferenceField field(tx, m);
  for (int rep = 0; rep < 100; ++rep) {
    const Point2 c{rng.uniform() * 20 - 10, rng.uniform() * 20 - 10};
    const double half = 0.05 + rng.uniform();
    const BoundingBox box{{c.x - half, c.y - half}, {c.x + half, c.y + half}};
    double lo = 0.0, hi = 0.0;
    field.box_bounds(box, lo, hi);
    for (int k = 0; k < 20; ++k) {
      const Point2 y{box.lo.x + 2 * half * rng.uniform(), box.lo.y + 2 * half * rng.uniform()};
      const double v = field.at(y).value() - field.noise_floor();
      CHECK(v >= lo * (1 - 1e-12));
      CHECK(v <= hi * (1 + 1e-12));
      CHECK(field.partial(y, 2.5) <= v * (1 + 1e-12));
    }
  }
}

}  // TEST_SUITE
