#include "meanwidth/specfn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "meanwidth/errors.hpp"

namespace meanwidth::specfn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934381868;
constexpr double kHalfLog2Pi = 0.918938533204672741780329736405617640;

// Asymptotic log F(x) for x far in the lower tail, where F underflows.
double log_normal_cdf_tail(double x) {
  const double inv2 = 1.0 / (x * x);
  const double series =
      1.0 - inv2 * (1.0 - inv2 * (3.0 - inv2 * (15.0 - inv2 * 105.0)));
  return -0.5 * x * x - std::log(-x) - kHalfLog2Pi + std::log(series);
}

// Stirling series for log Gamma, valid to full precision for x >= 10.
double log_gamma_stirling(double x) {
  static constexpr std::array<double, 7> kCoeff = {
      1.0 / 12.0,           -1.0 / 360.0,  1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0,         -691.0 / 360360.0, 1.0 / 156.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double sum = 0.0;
  double power = inv;
  for (double c : kCoeff) {
    sum += c * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + sum;
}

// log(Gamma(x + 1/2) / Gamma(x)) from the Bernoulli-polynomial expansion;
// the omitted x^-11 term is below 1e-16 for x >= 20.
double log_gamma_half_step_series(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (-1.0 / 8.0 +
             inv2 * (1.0 / 192.0 +
                     inv2 * (-1.0 / 640.0 +
                             inv2 * (17.0 / 14336.0 + inv2 * (-31.0 / 18432.0)))));
  return 0.5 * std::log(x) + series;
}

double log_gamma_half_step(double x) {
  if (x >= 20.0) return log_gamma_half_step_series(x);
  return log_gamma(x + 0.5) - log_gamma(x);
}

// K0 by its power series about the origin; accurate for 0 < x <= 2.
double bessel_k0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;     // q^k / (k!)^2
  double harmonic = 0.0; // H_k
  double i0 = 1.0;
  double tail = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    tail += term * harmonic;
    if (term * harmonic < kEps * 1e-2 * tail) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0 + tail;
}

// exp(x) K0(x) by Steed's continued fraction (Temme / Thompson-Barnett CF2).
double bessel_k0_scaled_cf(double x) {
  constexpr double a1 = 0.25;  // 1/4 - nu^2 with nu = 0
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 1000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) {
      return std::sqrt(kPi / (2.0 * x)) / s;
    }
  }
  throw ConvergenceError("bessel_k0: continued fraction did not converge at x=" +
                         std::to_string(x));
}

// exp(x) K0(x) by the Hankel expansion, truncated at the smallest term.
double bessel_k0_scaled_asymptotic(double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * odd * odd / (8.0 * k * x);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 0.1 * kEps * std::abs(sum)) break;
  }
  return std::sqrt(kPi / (2.0 * x)) * sum;
}

}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_sf(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double log_normal_cdf(double x) {
  if (x < -1.0) {
    const double p = normal_cdf(x);
    return p > std::numeric_limits<double>::min() ? std::log(p)
                                                  : log_normal_cdf_tail(x);
  }
  return std::log1p(-normal_sf(x));
}

double log_normal_sf(double x) { return log_normal_cdf(-x); }

double arcsec(double x) {
  if (!(x >= 1.0)) {
    throw DomainError("arcsec: argument must be >= 1, got " + std::to_string(x));
  }
  return std::acos(1.0 / x);
}

double lambert_w0(double x) {
  if (!(x >= 0.0)) {
    throw DomainError("lambert_w0: argument must be >= 0, got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  constexpr double kE = 2.71828182845904523536028747135266250;
  if (x <= kE) {
    // Halley on f(w) = w e^w - x.
    double w = std::log1p(x);
    for (int it = 0; it < 50; ++it) {
      const double ew = std::exp(w);
      const double f = w * ew - x;
      const double wp1 = w + 1.0;
      const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
      w -= step;
      if (std::abs(step) <= 2.0 * kEps * std::abs(w)) return w;
    }
  } else {
    // Halley on f(w) = w + log w - log x, which stays finite for huge x.
    const double lx = std::log(x);
    double w = lx - std::log(lx);
    if (w <= 0.0) w = 1.0;
    for (int it = 0; it < 50; ++it) {
      const double f = w + std::log(w) - lx;
      const double d1 = 1.0 + 1.0 / w;
      const double d2 = -1.0 / (w * w);
      const double step = f / (d1 - 0.5 * f * d2 / d1);
      w -= step;
      if (std::abs(step) <= 2.0 * kEps * std::abs(w)) return w;
    }
  }
  throw ConvergenceError("lambert_w0: Halley iteration did not converge for x=" +
                         std::to_string(x));
}

double bessel_k0_scaled(double x) {
  if (!(x > 0.0)) {
    throw DomainError("bessel_k0: argument must be > 0, got " + std::to_string(x));
  }
  if (x <= 2.0) return std::exp(x) * bessel_k0_series(x);
  if (x <= 25.0) return bessel_k0_scaled_cf(x);
  return bessel_k0_scaled_asymptotic(x);
}

double bessel_k0(double x) {
  if (!(x > 0.0)) {
    throw DomainError("bessel_k0: argument must be > 0, got " + std::to_string(x));
  }
  if (x <= 2.0) return bessel_k0_series(x);
  return std::exp(-x) * bessel_k0_scaled(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be > 0, got " + std::to_string(x));
  }
  if (std::isinf(x)) return x;
  if (x >= 10.0) return log_gamma_stirling(x);
  // Shift upward with Gamma(x) = Gamma(x + k) / (x (x+1) ... (x+k-1)).
  double product = 1.0;
  double shifted = x;
  while (shifted < 10.0) {
    product *= shifted;
    shifted += 1.0;
  }
  return log_gamma_stirling(shifted) - std::log(product);
}

namespace {
constexpr std::int64_t kRatioRecurrenceLimit = 64;
}  // namespace

double gamma_ratio_half(std::int64_t n) {
  if (n < 1) {
    throw DomainError("gamma_ratio_half: n must be >= 1, got " + std::to_string(n));
  }
  if (n <= kRatioRecurrenceLimit) {
    // r(n + 2) = n / (n + 1) * r(n), from r(1) = sqrt(pi), r(2) = 2 / sqrt(pi).
    double r = n % 2 == 1 ? kSqrtPi : 2.0 / kSqrtPi;
    for (std::int64_t k = 2 - n % 2; k + 2 <= n; k += 2) {
      r *= static_cast<double>(k) / static_cast<double>(k + 1);
    }
    return r;
  }
  return std::exp(-log_gamma_half_step(0.5 * static_cast<double>(n)));
}

double chi_mean(std::int64_t n) {
  if (n < 1) {
    throw DomainError("chi_mean: n must be >= 1, got " + std::to_string(n));
  }
  if (n <= kRatioRecurrenceLimit) return kSqrt2 / gamma_ratio_half(n);
  return kSqrt2 * std::exp(log_gamma_half_step(0.5 * static_cast<double>(n)));
}

}  // namespace meanwidth::specfn
