#pragma once

#include "meanwidth/quad.hpp"

// Moments of the range r_n = max - min of n independent standard normal
// samples, by direct quadrature for any n up to kMaxQuadratureN and by the
// exact closed forms for n = 2..7.

namespace meanwidth::orderstats {

/// Largest sample size accepted by the quadrature routes; beyond it the
/// integrand powers underflow and the asymptotics module takes over.
inline constexpr int kMaxQuadratureN = 500;

enum class Method { quadrature, closed_form };

struct RangeMoments {
  int n = 0;
  double mu = 0.0;  // E(r_n)
  double nu = 0.0;  // E(r_n^2)
  Method method = Method::quadrature;
};

/// E(r_n) = integral over R of 1 - F(x)^n - (1 - F(x))^n.  n = 1 gives 0.
double mu_quadrature(int n, const quad::QuadConfig& cfg = {});

/// E(r_n^2) = 2 * double integral over x < y of
/// 1 - F(y)^n - (1 - F(x))^n + (F(y) - F(x))^n.  n = 1 gives 0.
double nu_quadrature(int n, const quad::QuadConfig& cfg = {});

/// Exact E(r_n) for 2 <= n <= 7.
double mu_closed(int n);

/// Exact E(r_n^2) for 2 <= n <= 7.
double nu_closed(int n);

RangeMoments range_moments(int n, Method method, const quad::QuadConfig& cfg = {});

// Auxiliary constants appearing in the closed forms.

/// arcsec(k + 1) / (2 pi), k > 0.
double s_constant(double k);

/// sqrt(k)/pi * integral_0^{pi/4} dx / sqrt(k + sec^2 x); equals s_constant(k).
double s_constant_integral(double k, const quad::QuadConfig& cfg = {});

/// (1 / (2 pi^2)) integral_0^{pi S_k} arcsec(1 + k(k+1)/(k - tan^2 z)) dz.
double t_constant(double k, const quad::QuadConfig& cfg = {});

/// sqrt(k)/pi^2 * double integral over [0, pi/4]^2 of
/// 1 / sqrt(k + sec^2 x + sec^2 y); equals t_constant(k).
double t_constant_double_integral(double k, const quad::QuadConfig& cfg = {});

/// (1/pi^2) integral_0^1 arcsec(2t^2 + 4) / ((2t^2 + 1) sqrt(2t^2 + 3)) dt.
double u_constant(const quad::QuadConfig& cfg = {});

/// (1/pi^2) integral_0^1 arcsec(t^2 + 5) / ((t^2 + 2) sqrt(t^2 + 4)) dt.
double v_constant(const quad::QuadConfig& cfg = {});

/// Integrands of u_constant / v_constant (without the 1/pi^2 factor).
double u_integrand(double t);
double v_integrand(double t);

}  // namespace meanwidth::orderstats
