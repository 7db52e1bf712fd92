#pragma once

#include "meanwidth/quad.hpp"

// Large-n behaviour of the normal-sample range and of the simplex mean width.
//
// The centring sequence a_n solves 2 pi a^2 exp(a^2) = n^2, i.e.
// a_n = sqrt(W0(n^2 / (2 pi))).  The limit law of sqrt(2 ln n)(r_n - 2 a_n)
// is the convolution of two standard Gumbel laws, with density
// 2 exp(-y) K0(2 exp(-y/2)).

namespace meanwidth::asymptotics {

struct AsymptoticEval {
  double n = 0.0;
  double a_n = 0.0;
  double mu_approx = 0.0;
  double mean_width_approx = 0.0;
  double inscaled_approx = 0.0;
};

/// a_n for real n > 0 (the sample size enters only through n^2).
double a_n(double n);

/// 2 pi a^2 exp(a^2) / n^2 - 1, evaluated in logarithms so it stays
/// meaningful when exp(a^2) is huge.
double a_n_residual(double n, double a);

/// sqrt(2 ln n) - (ln ln n + ln 4 pi) / (2 sqrt(2 ln n)), n >= 3.
double a_n_expansion(double n);

/// 2 exp(-y) K0(2 exp(-y/2)).
double limit_range_density(double y);

/// The same density as the convolution integral of two Gumbel densities.
double limit_range_density_convolution(double y, const quad::QuadConfig& cfg = {});

/// Moments of the limit law by quadrature over the truncated range
/// [kDensityLower, kDensityUpper], where the integrand is below 1e-18.
inline constexpr double kDensityLower = -12.0;
inline constexpr double kDensityUpper = 60.0;
double limit_density_moment(int order, const quad::QuadConfig& cfg = {});

/// 2 (a_n + gamma / sqrt(2 ln n)), n >= 3.
double mu_asymptotic(double n);

/// 2 sqrt(ln n / n) - (ln ln n + ln 4 pi - 2 gamma) / (2 sqrt(n ln n)), n >= 3.
double simplex_mean_width_asymptotic(double n);

/// simplex_mean_width_asymptotic(n) rescaled to unit inradius, i.e.
/// multiplied by sqrt(2 n (n + 1)).
double inscaled_mean_width_asymptotic(double n);

/// First-order inradius-scaled form 2 sqrt(2 n ln n).
double inscaled_mean_width_leading(double n);

AsymptoticEval evaluate(double n);

}  // namespace meanwidth::asymptotics
