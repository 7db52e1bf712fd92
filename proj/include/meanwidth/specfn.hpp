#pragma once

#include <cstdint>

// Scalar special functions shared by the rest of the library.
//
// Every function here is pure and safe to call concurrently.  Arguments
// outside the documented domain raise meanwidth::DomainError.

namespace meanwidth::specfn {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;
inline constexpr double kSqrt3 = 1.73205080756887729352744634150587237;
/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Standard normal density (1/sqrt(2 pi)) exp(-x^2/2).
double normal_pdf(double x);

/// Standard normal distribution function F(x) = erf(x/sqrt 2)/2 + 1/2.
double normal_cdf(double x);

/// Upper tail 1 - F(x), accurate when F(x) is close to 1.
double normal_sf(double x);

/// log F(x) without cancellation in either tail.
double log_normal_cdf(double x);

/// log(1 - F(x)) without cancellation in either tail.
double log_normal_sf(double x);

/// Principal arcsecant on [1, inf): arccos(1/x).
double arcsec(double x);

/// Principal branch of the Lambert W function on [0, inf).
///
/// Halley iteration; the result satisfies w e^w = x to a relative error
/// of about 1e-15.  Throws ConvergenceError if 50 iterations do not
/// suffice (never observed in practice).
double lambert_w0(double x);

/// Modified Bessel function of the second kind K0(x), x > 0.
///
/// Power series with logarithmic term for x <= 2, Steed's continued
/// fraction for 2 < x <= 25 and the Hankel asymptotic expansion above.
double bessel_k0(double x);

/// exp(x) K0(x); finite for arbitrarily large x.
double bessel_k0_scaled(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(n/2) / Gamma((n+1)/2), n >= 1, without overflow for large n.
double gamma_ratio_half(std::int64_t n);

/// Mean of the chi distribution with n degrees of freedom:
/// sqrt(2) Gamma((n+1)/2) / Gamma(n/2).
double chi_mean(std::int64_t n);

}  // namespace meanwidth::specfn
