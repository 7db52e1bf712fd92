#include "meanwidth/orderstats.hpp"

#include <cmath>
#include <string>

#include "meanwidth/errors.hpp"
#include "meanwidth/specfn.hpp"

namespace meanwidth::orderstats {

namespace {

using specfn::kPi;
using specfn::kSqrt3;
using specfn::kSqrtPi;

void check_quadrature_n(int n, const char* who) {
  if (n < 1 || n > kMaxQuadratureN) {
    throw DomainError(std::string(who) + ": n must be in [1, " +
                      std::to_string(kMaxQuadratureN) + "], got " + std::to_string(n));
  }
}

void check_closed_n(int n, const char* who) {
  if (n < 2 || n > 7) {
    throw DomainError(std::string(who) + ": closed form exists only for 2 <= n <= 7, got " +
                      std::to_string(n));
  }
}

// 1 - F(x)^n - (1 - F(x))^n, even in x.
double mu_kernel(int n, double x) {
  const double q = specfn::normal_sf(std::abs(x));
  return -std::expm1(n * std::log1p(-q)) - std::pow(q, n);
}

// P(min <= x, max > y) for x < y.  Written as P(some sample in the lighter
// tail) - P(some in that tail and none in the other), each factor of which
// is computed in relative precision, so the kernel decays to exactly zero
// as either tail empties.
double nu_kernel(int n, double x, double y) {
  const double below = specfn::normal_cdf(x);
  const double above = specfn::normal_sf(y);
  const bool use_below = below <= above;
  const double tail = use_below ? below : above;
  const double log_tail_or_middle =
      use_below ? specfn::log_normal_cdf(y) : specfn::log_normal_sf(x);
  const double share = std::min(1.0, tail / std::exp(log_tail_or_middle));
  const double some_in_tail = -std::expm1(n * std::log1p(-tail));
  const double confined = std::exp(n * log_tail_or_middle) * -std::expm1(n * std::log1p(-share));
  return std::max(0.0, some_in_tail - confined);
}

struct ClosedFormConstants {
  double s_half, s2, s3, t2, t3, u, v;
};

// Evaluated once, on first use, at tolerances well below the 1e-12 the
// closed forms are checked against.
const ClosedFormConstants& constants() {
  static const ClosedFormConstants kConstants = [] {
    quad::QuadConfig tight;
    tight.abs_tol = 1e-15;
    tight.rel_tol = 1e-15;
    return ClosedFormConstants{s_constant(0.5), s_constant(2.0),    s_constant(3.0),
                               t_constant(2.0, tight), t_constant(3.0, tight),
                               u_constant(tight),  v_constant(tight)};
  }();
  return kConstants;
}

}  // namespace

double mu_quadrature(int n, const quad::QuadConfig& cfg) {
  check_quadrature_n(n, "mu_quadrature");
  if (n == 1) return 0.0;
  return quad::integrate_real_line([n](double x) { return mu_kernel(n, x); }, cfg).value;
}

double nu_quadrature(int n, const quad::QuadConfig& cfg) {
  check_quadrature_n(n, "nu_quadrature");
  if (n == 1) return 0.0;
  return 2.0 *
         quad::integrate_2d([n](double x, double y) { return nu_kernel(n, x, y); },
                            quad::BelowDiagonal{}, cfg)
             .value;
}

double mu_closed(int n) {
  check_closed_n(n, "mu_closed");
  const auto& c = constants();
  switch (n) {
    case 2: return 2.0 / kSqrtPi;
    case 3: return 3.0 / kSqrtPi;
    case 4: return 6.0 / kSqrtPi * (1.0 - 2.0 * c.s2);
    case 5: return 10.0 / kSqrtPi * (1.0 - 3.0 * c.s2);
    case 6: return 15.0 / kSqrtPi * (1.0 - 4.0 * c.s2 + 2.0 * c.t2);
    default: return 21.0 / kSqrtPi * (1.0 - 5.0 * c.s2 + 5.0 * c.t2);
  }
}

double nu_closed(int n) {
  check_closed_n(n, "nu_closed");
  const auto& c = constants();
  switch (n) {
    case 2: return 2.0;
    case 3: return 2.0 * (1.0 + 3.0 * kSqrt3 / (2.0 * kPi));
    case 4: return 2.0 * (1.0 + (3.0 + kSqrt3) / kPi);
    case 5:
      return 2.0 * (1.0 + 5.0 * kSqrt3 / (2.0 * kPi) + 30.0 / kPi * c.s_half -
                    5.0 * kSqrt3 / kPi * c.s3);
    case 6:
      return 2.0 * (1.0 + 5.0 * (9.0 + 2.0 * kSqrt3) / (2.0 * kPi) - 90.0 / kPi * c.s2 -
                    15.0 * kSqrt3 / kPi * c.s3);
    default:
      return 2.0 * (1.0 + 35.0 * kSqrt3 / (4.0 * kPi) + 210.0 / kPi * c.s_half -
                    105.0 / kPi * c.s2 - 35.0 * kSqrt3 / kPi * c.s3 +
                    35.0 * kSqrt3 / (2.0 * kPi) * c.t3 + 210.0 / kPi * c.u -
                    420.0 / kPi * c.v);
  }
}

RangeMoments range_moments(int n, Method method, const quad::QuadConfig& cfg) {
  if (method == Method::closed_form) return {n, mu_closed(n), nu_closed(n), method};
  return {n, mu_quadrature(n, cfg), nu_quadrature(n, cfg), method};
}

double s_constant(double k) {
  if (!(k > 0.0)) throw DomainError("s_constant: k must be > 0");
  return specfn::arcsec(k + 1.0) / (2.0 * kPi);
}

double s_constant_integral(double k, const quad::QuadConfig& cfg) {
  if (!(k > 0.0)) throw DomainError("s_constant_integral: k must be > 0");
  const auto r = quad::integrate(
      [k](double x) {
        const double c = std::cos(x);
        return 1.0 / std::sqrt(k + 1.0 / (c * c));
      },
      0.0, kPi / 4.0, cfg);
  return std::sqrt(k) / kPi * r.value;
}

double t_constant(double k, const quad::QuadConfig& cfg) {
  if (!(k > 0.0)) throw DomainError("t_constant: k must be > 0");
  const double upper = kPi * s_constant(k);
  // The reduction is only valid while tan^2 z stays below k on [0, upper].
  const double tan_upper = std::tan(upper);
  if (!(tan_upper * tan_upper < k)) {
    throw DomainError("t_constant: tan^2 reaches k inside the integration range for k=" +
                      std::to_string(k));
  }
  const auto r = quad::integrate(
      [k](double z) {
        const double t = std::tan(z);
        return specfn::arcsec(1.0 + k * (k + 1.0) / (k - t * t));
      },
      0.0, upper, cfg);
  return r.value / (2.0 * kPi * kPi);
}

double t_constant_double_integral(double k, const quad::QuadConfig& cfg) {
  if (!(k > 0.0)) throw DomainError("t_constant_double_integral: k must be > 0");
  const auto r = quad::integrate_2d(
      [k](double x, double y) {
        const double cx = std::cos(x);
        const double cy = std::cos(y);
        return 1.0 / std::sqrt(k + 1.0 / (cx * cx) + 1.0 / (cy * cy));
      },
      quad::Rectangle{0.0, kPi / 4.0, 0.0, kPi / 4.0}, cfg);
  return std::sqrt(k) / (kPi * kPi) * r.value;
}

double u_integrand(double t) {
  const double s = 2.0 * t * t;
  return specfn::arcsec(s + 4.0) / ((s + 1.0) * std::sqrt(s + 3.0));
}

double v_integrand(double t) {
  const double s = t * t;
  return specfn::arcsec(s + 5.0) / ((s + 2.0) * std::sqrt(s + 4.0));
}

double u_constant(const quad::QuadConfig& cfg) {
  return quad::integrate(u_integrand, 0.0, 1.0, cfg).value / (kPi * kPi);
}

double v_constant(const quad::QuadConfig& cfg) {
  return quad::integrate(v_integrand, 0.0, 1.0, cfg).value / (kPi * kPi);
}

}  // namespace meanwidth::orderstats
