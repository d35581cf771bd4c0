#include "sinrmc/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "sinrmc/error.hpp"
#include "sinrmc/quadrature.hpp"

namespace sinrmc {
namespace {

constexpr double kPi = std::numbers::pi;
// pi^{3/2} / 2: erfc argument scale of the unit-intensity interference law.
const double kShotScale = std::pow(kPi, 1.5) / 2.0;

enum class ErfKind { kErfc, kErfcx };

// W. J. Cody, "Rational Chebyshev approximations for the error function",
// Math. Comp. 23 (1969), coefficients from the SPECFUN CALERF routine.
double calerf(double x, ErfKind kind) {
  static constexpr double a[5] = {3.16112374387056560e00, 1.13864154151050156e02,
                                  3.77485237685302021e02, 3.20937758913846947e03,
                                  1.85777706184603153e-1};
  static constexpr double b[4] = {2.36012909523441209e01, 2.44024637934444173e02,
                                  1.28261652607737228e03, 2.84423683343917062e03};
  static constexpr double c[9] = {5.64188496988670089e-1, 8.88314979438837594e00,
                                  6.61191906371416295e01, 2.98635138197400131e02,
                                  8.81952221241769090e02, 1.71204761263407058e03,
                                  2.05107837782607147e03, 1.23033935479799725e03,
                                  2.15311535474403846e-8};
  static constexpr double d[8] = {1.57449261107098347e01, 1.17693950891312499e02,
                                  5.37181101862009858e02, 1.62138957456669019e03,
                                  3.29079923573345963e03, 4.36261909014324716e03,
                                  3.43936767414372164e03, 1.23033935480374942e03};
  static constexpr double p[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                                  1.25781726111229246e-1, 1.60837851487422766e-2,
                                  6.58749161529837803e-4, 1.63153871373020978e-2};
  static constexpr double q[5] = {2.56852019228982242e00, 1.87295284992346047e00,
                                  5.27905102951428412e-1, 6.05183413124413191e-2,
                                  2.33520497626869185e-3};
  constexpr double kInvSqrtPi = 5.6418958354775628695e-1;
  constexpr double kThresh = 0.46875;
  constexpr double kXsmall = 1.11e-16;
  constexpr double kXbig = 26.543;
  constexpr double kXhuge = 6.71e7;
  constexpr double kXmax = 2.53e307;
  constexpr double kXneg = -26.628;

  // exp(-y^2) with the argument split to limit cancellation error.
  auto exp_neg_sq = [](double y) {
    const double ysq = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ysq) * (y + ysq);
    return std::exp(-ysq * ysq) * std::exp(-del);
  };

  const double y = std::abs(x);
  double result = 0.0;
  if (y <= kThresh) {
    const double ysq = y > kXsmall ? y * y : 0.0;
    double num = a[4] * ysq;
    double den = ysq;
    for (int i = 0; i < 3; ++i) {
      num = (num + a[i]) * ysq;
      den = (den + b[i]) * ysq;
    }
    result = 1.0 - x * (num + a[3]) / (den + b[3]);
    return kind == ErfKind::kErfcx ? std::exp(ysq) * result : result;
  }
  if (y <= 4.0) {
    double num = c[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
      num = (num + c[i]) * y;
      den = (den + d[i]) * y;
    }
    result = (num + c[7]) / (den + d[7]);
    if (kind == ErfKind::kErfc) result *= exp_neg_sq(y);
  } else if (y >= kXbig && (kind == ErfKind::kErfc || y >= kXmax)) {
    result = 0.0;
  } else if (y >= kXhuge) {
    result = kInvSqrtPi / y;
  } else {
    const double ysq = 1.0 / (y * y);
    double num = p[5] * ysq;
    double den = ysq;
    for (int i = 0; i < 4; ++i) {
      num = (num + p[i]) * ysq;
      den = (den + q[i]) * ysq;
    }
    result = ysq * (num + p[4]) / (den + q[4]);
    result = (kInvSqrtPi - result) / y;
    if (kind == ErfKind::kErfc) result *= exp_neg_sq(y);
  }

  if (x >= 0.0) return result;
  if (kind == ErfKind::kErfc) return 2.0 - result;
  if (x < kXneg) return std::numeric_limits<double>::max();
  const double xsq = std::trunc(x * 16.0) / 16.0;
  const double del = (x - xsq) * (x + xsq);
  const double e = std::exp(xsq * xsq) * std::exp(del);
  return (e + e) - result;
}

}  // namespace

double erfc(double x) { return calerf(x, ErfKind::kErfc); }

double erfcx(double x) { return calerf(x, ErfKind::kErfcx); }

double interference_cdf(double x, double mu_T) {
  if (!(mu_T > 0.0)) throw ParameterError("mu_T must be > 0");
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  return erfc(mu_T * kShotScale / std::sqrt(x));
}

double connect_prob(double r, double mu_T) {
  if (!(mu_T >= 0.0)) throw ParameterError("mu_T must be >= 0");
  if (r >= 1.0) return 0.0;
  if (r <= 0.0) return 1.0;
  const double r2 = r * r;
  // r^-4 - 1 written as (1 - r^4) / r^4 for accuracy near r = 1.
  return erfc(mu_T * kShotScale * r2 / std::sqrt((1.0 - r2) * (1.0 + r2)));
}

double expected_connect_count(double mu_R, double mu_T) {
  if (!(mu_R >= 0.0) || !(mu_T >= 0.0)) throw ParameterError("intensities must be >= 0");
  // int_0^1 erfc(c u / sqrt(1 - u^2)) du = exp(c^2) erfc(c); erfcx avoids the
  // overflow of exp(c^2) once mu_T exceeds about 6.
  return mu_R * kPi * erfcx(mu_T * kShotScale);
}

double expected_connect_count_quad(double mu_R, double mu_T, double abs_tol) {
  if (!(mu_R >= 0.0) || !(mu_T >= 0.0)) throw ParameterError("intensities must be >= 0");
  if (mu_R == 0.0) return 0.0;
  const double integral = integrate_adaptive(
      [mu_T](double r) { return r * connect_prob(r, mu_T); }, 0.0, 1.0,
      abs_tol / (2.0 * kPi * mu_R));
  return mu_R * 2.0 * kPi * integral;
}

double expected_average_count(double mu_R, double mu_T) {
  return mu_T * expected_connect_count(mu_R, mu_T);
}

double poisson_entropy(double mu) {
  if (!(mu >= 0.0)) throw ParameterError("Poisson entropy needs mu >= 0");
  if (mu == 0.0) return 1.0;
  return mu * std::log(mu) - mu + 1.0;
}

namespace {
void check_open_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw ParameterError("radius must lie in (0, 1)");
}
}  // namespace

double isolation_objective(double r, double lam) {
  check_open_radius(r);
  if (!(lam > 0.0)) throw ParameterError("lambda must be > 0");
  const double r2 = r * r;
  const double excess = (1.0 - r2) * (1.0 + r2) / (r2 * r2);  // r^-4 - 1
  return poisson_entropy(lam) + erfc(lam * kShotScale / std::sqrt(excess));
}

double stationarity_residual(double r, double lam) {
  check_open_radius(r);
  if (!(lam > 0.0)) throw ParameterError("lambda must be > 0");
  const double r2 = r * r;
  const double excess = (1.0 - r2) * (1.0 + r2) / (r2 * r2);
  // The exponent is negative: it is the derivative of the erfc term. With a
  // positive exponent there is no root near r = 1.
  return std::log(lam) - kPi / std::sqrt(excess) *
                             std::exp(-kPi * kPi * kPi * lam * lam / (4.0 * excess));
}

}  // namespace sinrmc
