#include <doctest.h>

#include <cmath>

#include "meanwidth/asymptotics.hpp"
#include "meanwidth/errors.hpp"
#include "meanwidth/orderstats.hpp"
#include "meanwidth/specfn.hpp"
#include "meanwidth/widths.hpp"
#include "oracles.hpp"

using namespace meanwidth;
using namespace meanwidth::asymptotics;
using specfn::kEulerGamma;
using specfn::kPi;

namespace {

// log(2 pi a^2 e^(a^2)) - log(n^2), relative form of the defining equation.
double log_residual(double n, double a) {
  return std::log(2.0 * kPi) + 2.0 * std::log(a) + a * a - 2.0 * std::log(n);
}

// Expected range of n normals through the simplex mean-width integral,
// which is not subject to the range-quadrature size cap.
double mu_exact(int n) {
  if (n <= orderstats::kMaxQuadratureN) return orderstats::mu_quadrature(n);
  return 2.0 * widths::simplex_mean_width_hz(n - 1) / specfn::gamma_ratio_half(n - 1);
}

double gumbel(double x) { return std::exp(-x - std::exp(-x)); }

}  // namespace

TEST_CASE("centring sequence") {
  CHECK(a_n(std::sqrt(2.0 * kPi * std::exp(1.0))) == doctest::Approx(1.0).epsilon(1e-14));
  const double a10 =
      oracle::bisect([](double a) { return 2.0 * kPi * a * a * std::exp(a * a) - 100.0; }, 0.0, 3.0);
  CHECK(a_n(10.0) == doctest::Approx(a10).epsilon(1e-14));
  CHECK(a_n(10.0) == doctest::Approx(1.43165379).epsilon(1e-8));
  for (double n : {2.0, 10.0, 1e3, 1e6, 1e9}) {
    CAPTURE(n);
    const double a = a_n(n);
    CHECK(a > 0.0);
    CHECK(std::abs(std::expm1(log_residual(n, a))) <= 1e-12);
    CHECK(std::abs(a_n_residual(n, a)) <= 1e-12);
  }
}

TEST_CASE("two-term expansion of the centring sequence") {
  CHECK(std::abs(a_n_expansion(1e3) / a_n(1e3) - 1.0) < 0.02);
  CHECK(std::abs(a_n_expansion(1e6) / a_n(1e6) - 1.0) < 0.005);
  CHECK_THROWS_AS(a_n_expansion(2.0), DomainError);
  // The gap changes sign near n = 500 and then shrinks slowly.
  double prev = INFINITY;
  for (double n : {1e6, 1e9, 1e12, 1e15}) {
    const double gap = std::abs(a_n(n) - a_n_expansion(n));
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("limit density") {
  for (double y = -3.0; y <= 10.0; y += 0.25) {
    CAPTURE(y);
    const double ref = oracle::simpson([y](double x) { return gumbel(x) * gumbel(y - x); },
                                       -6.0, y + 40.0, 40000);
    CHECK(std::abs(limit_range_density(y) - ref) <= 1e-9);
    CHECK(std::abs(limit_range_density(y) - limit_range_density_convolution(y)) <= 1e-9);
  }
  CHECK(limit_range_density(-12.0) < 1e-18);
  CHECK(limit_range_density(60.0) * 3600.0 < 1e-18);
}

TEST_CASE("limit density moments") {
  CHECK(std::abs(limit_density_moment(0) - 1.0) <= 1e-10);
  CHECK(std::abs(limit_density_moment(1) - 2.0 * kEulerGamma) <= 1e-8);
  CHECK(std::abs(limit_density_moment(1) - 1.1544313298030657) <= 1e-8);
  const double second = kPi * kPi / 3.0 + 4.0 * kEulerGamma * kEulerGamma;
  CHECK(std::abs(limit_density_moment(2) - second) <= 1e-7);
  CHECK(second == doctest::Approx(4.6225798289273276).epsilon(1e-15));
}

TEST_CASE("expected range approximation") {
  CHECK(std::abs(mu_asymptotic(8) / 2.847 - 1.0) < 0.14);
  CHECK(std::abs(mu_asymptotic(100) / mu_exact(100) - 1.0) < 0.025);
  CHECK(mu_exact(1000) > mu_exact(500));
  double prev = INFINITY;
  for (int n : {10, 50, 100, 400, 1000}) {
    CAPTURE(n);
    const double rel = std::abs(mu_asymptotic(n) / mu_exact(n) - 1.0);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK_THROWS_AS(mu_asymptotic(2), DomainError);
}

TEST_CASE("simplex mean width approximation") {
  const int n = 1000;
  const double exact = 0.5 * specfn::gamma_ratio_half(n) * mu_exact(n + 1);
  CHECK(exact == doctest::Approx(widths::simplex_mean_width_hz(n)).epsilon(1e-12));
  CHECK(std::abs(simplex_mean_width_asymptotic(n) / exact - 1.0) < 0.02);
  for (int m : {10, 50, 100, 400}) {
    const double ex = widths::simplex_mean_width(m, widths::Source::quadrature);
    CHECK(std::abs(simplex_mean_width_asymptotic(m) / ex - 1.0) < 0.02);
  }
  for (double m : {3.0, 10.0, 1e4}) {
    CHECK(inscaled_mean_width_asymptotic(m) / simplex_mean_width_asymptotic(m) ==
          doctest::Approx(std::sqrt(2.0 * m * (m + 1.0))).epsilon(1e-14));
  }
  CHECK(inscaled_mean_width_leading(1e6) ==
        doctest::Approx(2.0 * std::sqrt(2.0 * 1e6 * std::log(1e6))).epsilon(1e-15));
}

TEST_CASE("leading term against the two-term form") {
  double prev = INFINITY;
  for (double m : {1e3, 1e6, 1e9, 1e12}) {
    const double lead = 2.0 * std::sqrt(std::log(m) / m);
    const double rel = std::abs(lead / simplex_mean_width_asymptotic(m) - 1.0);
    CHECK(rel < prev);
    prev = rel;
  }
  const double m = 1e6;
  CHECK(std::abs(2.0 * std::sqrt(std::log(m) / m) / simplex_mean_width_asymptotic(m) - 1.0) < 0.08);
}

TEST_CASE("evaluation record") {
  const auto e = evaluate(50.0);
  CHECK(e.n == 50.0);
  CHECK(e.a_n == a_n(50.0));
  CHECK(e.mu_approx == mu_asymptotic(50.0));
  CHECK(e.mean_width_approx == simplex_mean_width_asymptotic(50.0));
  CHECK(e.inscaled_approx == inscaled_mean_width_asymptotic(50.0));
}
