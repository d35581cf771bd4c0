#pragma once

// Closed forms for the alpha = 4, d = 2, w = t = 1 setting with unit powers
// and no fading. The unit-intensity shot noise S = sum_i |X_i|^-4 is
// inverse-gamma(1/2, pi^3/4); a PPP of intensity mu is PPP(1) scaled by
// 1/sqrt(mu), so S(mu) has the law of mu^2 S(1).

namespace sinrmc {

/// Complementary error function (Cody's rational Chebyshev approximations).
double erfc(double x);
/// Scaled complement exp(x^2) erfc(x), finite for all x > -26.6.
double erfcx(double x);

/// P(S(mu_T) <= x) = erfc(mu_T pi^{3/2} / (2 sqrt(x))) for x > 0, else 0.
/// Throws ParameterError for mu_T <= 0.
double interference_cdf(double x, double mu_T);

/// P(r^-4 >= 1 + S(mu_T)): 1 at r <= 0, 0 at r >= 1.
double connect_prob(double r, double mu_T);

/// Expected number of receivers connectable to a typical transmitter,
/// mu_R pi erfcx(mu_T pi^{3/2} / 2).
double expected_connect_count(double mu_R, double mu_T);
/// Same quantity as mu_R 2 pi int_0^1 r connect_prob(r, mu_T) dr.
double expected_connect_count_quad(double mu_R, double mu_T, double abs_tol = 1e-10);

/// Expected average-connect-count functional per unit area,
/// mu_T * expected_connect_count(mu_R, mu_T) by Campbell's theorem.
double expected_average_count(double mu_R, double mu_T);

/// mu ln mu - mu + 1 with 0 ln 0 = 0. Throws ParameterError for mu < 0.
double poisson_entropy(double mu);

/// Per-radius objective for the radial isolation tilt:
/// poisson_entropy(lam) + P(r^-4 >= 1 + lam^2 S(1)).
double isolation_objective(double r, double lam);

/// d/dlam isolation_objective:
/// ln lam - (pi / sqrt(D)) exp(-pi^3 lam^2 / (4 D)), D = r^-4 - 1.
double stationarity_residual(double r, double lam);

}  // namespace sinrmc
