#include "meanwidth/asymptotics.hpp"

#include <cmath>
#include <string>

#include "meanwidth/errors.hpp"
#include "meanwidth/specfn.hpp"

namespace meanwidth::asymptotics {

namespace {

using specfn::kEulerGamma;
using specfn::kPi;

void require_expansion_domain(double n, const char* who) {
  if (!(n >= 3.0) || !std::isfinite(n)) {
    throw DomainError(std::string(who) + ": n must be finite and >= 3, got " +
                      std::to_string(n));
  }
}

double gumbel_density(double x) { return std::exp(-x - std::exp(-x)); }

}  // namespace

double a_n(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("a_n: n must be finite and > 0, got " + std::to_string(n));
  }
  return std::sqrt(specfn::lambert_w0(n * n / (2.0 * kPi)));
}

double a_n_residual(double n, double a) {
  const double a2 = a * a;
  return std::expm1(std::log(2.0 * kPi) + std::log(a2) + a2 - 2.0 * std::log(n));
}

double a_n_expansion(double n) {
  require_expansion_domain(n, "a_n_expansion");
  const double ln = std::log(n);
  const double root = std::sqrt(2.0 * ln);
  return root - 0.5 * (std::log(ln) + std::log(4.0 * kPi)) / root;
}

double limit_range_density(double y) {
  // 2 exp(-y) K0(z) with z = 2 exp(-y/2), written with the scaled Bessel
  // function so neither factor overflows.
  const double z = 2.0 * std::exp(-0.5 * y);
  if (z == 0.0) return 0.0;
  if (!std::isfinite(z)) return 0.0;
  return 2.0 * std::exp(-y - z) * specfn::bessel_k0_scaled(z);
}

double limit_range_density_convolution(double y, const quad::QuadConfig& cfg) {
  return quad::integrate_real_line(
             [y](double x) { return gumbel_density(x) * gumbel_density(y - x); }, cfg)
      .value;
}

double limit_density_moment(int order, const quad::QuadConfig& cfg) {
  if (order < 0) throw DomainError("limit_density_moment: order must be >= 0");
  return quad::integrate(
             [order](double y) { return std::pow(y, order) * limit_range_density(y); },
             kDensityLower, kDensityUpper, cfg)
      .value;
}

double mu_asymptotic(double n) {
  require_expansion_domain(n, "mu_asymptotic");
  return 2.0 * (a_n(n) + kEulerGamma / std::sqrt(2.0 * std::log(n)));
}

double simplex_mean_width_asymptotic(double n) {
  require_expansion_domain(n, "simplex_mean_width_asymptotic");
  const double ln = std::log(n);
  return 2.0 * std::sqrt(ln / n) -
         (std::log(ln) + std::log(4.0 * kPi) - 2.0 * kEulerGamma) / (2.0 * std::sqrt(n * ln));
}

double inscaled_mean_width_asymptotic(double n) {
  return simplex_mean_width_asymptotic(n) * std::sqrt(2.0 * n * (n + 1.0));
}

double inscaled_mean_width_leading(double n) {
  require_expansion_domain(n, "inscaled_mean_width_leading");
  return 2.0 * std::sqrt(2.0 * n * std::log(n));
}

AsymptoticEval evaluate(double n) {
  return {n, a_n(n), mu_asymptotic(n), simplex_mean_width_asymptotic(n),
          inscaled_mean_width_asymptotic(n)};
}

}  // namespace meanwidth::asymptotics
