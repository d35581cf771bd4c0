#pragma once

#include <array>
#include <cmath>

namespace sinrmc {

/// Adaptive 7/15-point Gauss-Kronrod quadrature with recursive bisection.
/// Intervals are accepted once |K15 - G7| falls below their share of abs_tol.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol, int max_depth = 40) {
  static constexpr std::array<double, 8> kNodes = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> kKronrod = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr std::array<double, 4> kGauss = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  auto panel = [&](double lo, double hi, double& err) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double fc = f(c);
    double kron = kKronrod[7] * fc;
    double gauss = kGauss[3] * fc;
    for (int k = 0; k < 7; ++k) {
      const double s = f(c - h * kNodes[k]) + f(c + h * kNodes[k]);
      kron += kKronrod[k] * s;
      if (k % 2 == 1) gauss += kGauss[k / 2] * s;
    }
    err = std::abs((kron - gauss) * h);
    return kron * h;
  };

  auto recurse = [&](auto&& self, double lo, double hi, double tol, int depth) -> double {
    double err = 0.0;
    const double value = panel(lo, hi, err);
    if (err <= tol || depth >= max_depth) return value;
    const double mid = 0.5 * (lo + hi);
    return self(self, lo, mid, 0.5 * tol, depth + 1) + self(self, mid, hi, 0.5 * tol, depth + 1);
  };
  return recurse(recurse, a, b, abs_tol, 0);
}

}  // namespace sinrmc
