#include <doctest.h>

#include <cmath>

#include "meanwidth/errors.hpp"
#include "meanwidth/geom.hpp"
#include "meanwidth/specfn.hpp"
#include "meanwidth/widths.hpp"
#include "oracles.hpp"

using namespace meanwidth;
using namespace meanwidth::widths;
using specfn::kPi;

namespace {

constexpr double kGoldenMean[] = {0.954929658551372, 0.912260171954089, 0.874843256085440,
                                  0.842274297659162, 0.813743951590337};
constexpr double kGoldenMeanSq[] = {0.913496671566344, 0.835419517991054, 0.769572883591771,
                                    0.714241915072694, 0.667314714095430};

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("simplex") == Family::simplex);
  CHECK(parse_family("cube") == Family::cube);
  CHECK(parse_family("crosspolytope") == Family::crosspolytope);
  CHECK_FALSE(parse_family("dodecahedron").has_value());
  CHECK(to_string(Family::crosspolytope) == "crosspolytope");
  CHECK(to_string(Provenance::paper_conjecture) == "paper_conjecture");
}

TEST_CASE("simplex radii from explicit tetrahedron coordinates") {
  // (+-1, +-1, +-1) with an even number of minus signs, scaled to unit edge.
  const double s = 1.0 / std::sqrt(8.0);
  const double circum = std::sqrt(3.0) * s;
  CHECK(simplex_circumradius(3) == doctest::Approx(circum).epsilon(1e-15));
  CHECK(simplex_circumradius(3) == doctest::Approx(0.6123724356957945).epsilon(1e-15));
  CHECK(simplex_inradius(3) == doctest::Approx(circum / 3.0).epsilon(1e-15));
  CHECK(simplex_inradius(3) == doctest::Approx(0.20412414523193154).epsilon(1e-15));
  CHECK(simplex_circumradius(1) == doctest::Approx(0.5).epsilon(1e-15));
  for (int n = 1; n <= 20; ++n) {
    CHECK(simplex_circumradius(n) / simplex_inradius(n) == doctest::Approx(n).epsilon(1e-14));
  }
}

TEST_CASE("golden simplex values") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(std::abs(simplex_mean_width(n, Source::closed) - kGoldenMean[n - 2]) <= 1e-12);
    CHECK(std::abs(simplex_mean_width(n, Source::quadrature) - kGoldenMean[n - 2]) <= 1e-12);
    CHECK(std::abs(simplex_mean_sq_width(n, Source::closed) - kGoldenMeanSq[n - 2]) <= 1e-12);
    CHECK(std::abs(simplex_mean_sq_width(n, Source::quadrature) - kGoldenMeanSq[n - 2]) <= 1e-12);
  }
  CHECK(std::abs(simplex_mean_width_hz(3) - kGoldenMean[1]) <= 1e-12);
  CHECK(std::abs(simplex_mean_width_hz(4) - kGoldenMean[2]) <= 1e-12);
  CHECK_THROWS_AS(simplex_mean_width(7, Source::closed), DomainError);
  CHECK_THROWS_AS(simplex_mean_sq_width(7, Source::closed), DomainError);
  CHECK_THROWS_AS(simplex_mean_width(0, Source::quadrature), DomainError);
}

TEST_CASE("segment") {
  CHECK(simplex_mean_width(1, Source::closed) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(simplex_mean_width(1, Source::quadrature) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(simplex_mean_width_hz(1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(simplex_mean_sq_width(1, Source::closed) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cube_mean_width(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cube_mean_sq_width(1) == 1.0);
}

TEST_CASE("two routes for the simplex") {
  for (int n = 1; n <= 50; ++n) {
    CAPTURE(n);
    CHECK(std::abs(simplex_mean_width(n, Source::quadrature) - simplex_mean_width_hz(n)) <= 1e-10);
  }
  const int n = 20;
  const double coefficient = n * (n + 1) / (std::sqrt(2.0) * kPi) * specfn::gamma_ratio_half(n);
  const double integral = oracle::simpson(
      [](double x) { return std::exp(-2.0 * x * x) * std::pow(0.5 * (1.0 + std::erf(x)), n - 1); },
      -9.0, 9.0, 40000);
  CHECK(simplex_mean_width_hz(n) == doctest::Approx(coefficient * integral).epsilon(1e-11));
}

TEST_CASE("planar mean width is perimeter over pi") {
  CHECK(std::abs(simplex_mean_width(2, Source::closed) - 3.0 / kPi) <= 1e-14);
  CHECK(std::abs(simplex_mean_width(2, Source::quadrature) - 3.0 / kPi) <= 1e-14);
  CHECK(std::abs(cube_mean_width(2) - 4.0 / kPi) <= 1e-14);
  CHECK(std::abs(crosspolytope_mean_width(2) - 4.0 / kPi) <= 1e-14);
}

TEST_CASE("simplex width decreases with dimension") {
  for (int n = 2; n < 6; ++n) {
    CHECK(simplex_mean_width(n + 1, Source::closed) < simplex_mean_width(n, Source::closed));
  }
  for (int n = 6; n < 40; ++n) {
    CHECK(simplex_mean_width(n + 1, Source::quadrature) <
          simplex_mean_width(n, Source::quadrature));
  }
}

TEST_CASE("Jensen") {
  // n = 1 is an equality (constant width); allow for quadrature rounding.
  for (int n = 1; n <= 30; ++n) {
    const double m = simplex_mean_width(n, Source::quadrature);
    CHECK(simplex_mean_sq_width(n, Source::quadrature) >= m * m * (1.0 - 1e-14));
  }
  for (int n = 1; n <= 200; ++n) {
    CHECK(cube_mean_sq_width(n) >= cube_mean_width(n) * cube_mean_width(n));
  }
  for (auto family : {Family::simplex, Family::cube, Family::crosspolytope}) {
    for (int n = 2; n <= 12; ++n) {
      const auto r = width_report(family, n, Source::quadrature);
      if (r.mean_sq_width) CHECK(*r.mean_sq_width >= r.mean_width * r.mean_width);
    }
  }
}

TEST_CASE("scaled simplex widths") {
  CHECK(simplex_scaled_mean_width(2, Scaling::circumradius) ==
        doctest::Approx(3.0 * std::sqrt(3.0) / kPi).epsilon(1e-14));
  CHECK(simplex_scaled_mean_width(3, Scaling::circumradius) ==
        doctest::Approx(0.912260171954089 / std::sqrt(3.0 / 8.0)).epsilon(1e-12));
  for (int n = 1; n <= 12; ++n) {
    CHECK(simplex_scaled_mean_width(n, Scaling::inradius) /
              simplex_scaled_mean_width(n, Scaling::circumradius) ==
          doctest::Approx(n).epsilon(1e-13));
  }
}

TEST_CASE("cube") {
  CHECK(cube_mean_width(3) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(cube_mean_sq_width(2) == doctest::Approx(1.6366197723675814).epsilon(1e-15));
  CHECK(cube_mean_sq_provenance(2) == Provenance::theorem);
  CHECK(cube_mean_sq_provenance(3) == Provenance::paper_conjecture);
  CHECK(cube_circumradius(4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cube_inradius(7) == 0.5);
  // Exact angular integral: E(|cos t| + |sin t|) over the circle is 4/pi.
  CHECK(cube_mean_width(2) ==
        doctest::Approx(oracle::simpson(
                            [](double t) { return std::abs(std::cos(t)) + std::abs(std::sin(t)); },
                            0.0, kPi / 2.0, 2000) /
                        (kPi / 2.0))
            .epsilon(1e-12));
  CHECK_THROWS_AS(cube_mean_width(0), DomainError);
}

TEST_CASE("crosspolytope") {
  CHECK(std::abs(crosspolytope_mean_width(3) - geom::octa_mean_width_exact()) <= 1e-10);
  CHECK(crosspolytope_mean_width(3) == doctest::Approx(1.1754796560918218).epsilon(1e-13));
  CHECK_THROWS_AS(crosspolytope_mean_width(1), DomainError);
  CHECK(crosspolytope_circumradius(5) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(crosspolytope_inradius(2) == doctest::Approx(0.5).epsilon(1e-15));
  for (int n : {10, 59, 60, 61, 62, 80}) {
    CAPTURE(n);
    const double coefficient =
        2.0 * std::sqrt(2.0) * n * (n - 1) / kPi * specfn::gamma_ratio_half(n);
    const double integral = oracle::simpson(
        [n](double x) { return std::exp(-2.0 * x * x) * std::pow(std::erf(x), n - 2); }, 0.0, 9.0,
        40000);
    CHECK(crosspolytope_mean_width(n) == doctest::Approx(coefficient * integral).epsilon(1e-11));
  }
  CHECK(std::isfinite(crosspolytope_mean_width(1000)));
  CHECK(crosspolytope_mean_width(1000) < crosspolytope_mean_width(500));
}

TEST_CASE("mean square provenance") {
  for (int n = 1; n <= kMaxVerifiedMeanSqSimplexN; ++n) {
    CHECK(simplex_mean_sq_provenance(n) == Provenance::theorem);
  }
  CHECK(simplex_mean_sq_provenance(7) == Provenance::paper_conjecture);
  const auto r = width_report(Family::crosspolytope, 4, Source::quadrature);
  CHECK_FALSE(r.mean_sq_width.has_value());
}

TEST_CASE("width report consistency") {
  for (auto family : {Family::simplex, Family::cube, Family::crosspolytope}) {
    for (int n = 2; n <= 9; ++n) {
      const auto r = width_report(family, n, Source::quadrature);
      CHECK(r.circumradius > 0.0);
      CHECK(r.inradius > 0.0);
      CHECK(r.mean_width_circumscaled == doctest::Approx(r.mean_width / r.circumradius));
      CHECK(r.mean_width_inscaled == doctest::Approx(r.mean_width / r.inradius));
      CHECK(2.0 * r.inradius <= r.mean_width);
      CHECK(r.mean_width <= 2.0 * r.circumradius);
    }
  }
}
