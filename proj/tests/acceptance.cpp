// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "meanwidth/asymptotics.hpp"
#include "meanwidth/geom.hpp"
#include "meanwidth/orderstats.hpp"
#include "meanwidth/specfn.hpp"
#include "meanwidth/widths.hpp"

using namespace meanwidth;
using widths::Family;
using widths::Source;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

bool run_criterion(int id, const char* title, double budget_s,
                   const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < budget_s, "runtime " + fmt("%.1f", secs) + " s over budget");
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title, secs,
              v.detail.empty() ? "" : " -- ", v.detail.c_str());
  std::fflush(stdout);
  return v.ok;
}

// Printed values: 3-4 significant digits, truncated.
bool truncates_to(double value, double digits) { return value >= digits && value < digits + 1e-3; }

void golden_widths(Verdict& v) {
  constexpr double mean[] = {0.954929658551372, 0.912260171954089, 0.874843256085440,
                             0.842274297659162, 0.813743951590337};
  constexpr double mean_sq[] = {0.913496671566344, 0.835419517991054, 0.769572883591771,
                                0.714241915072694, 0.667314714095430};
  for (int n = 2; n <= 6; ++n) {
    const double dw = std::abs(widths::simplex_mean_width(n, Source::closed) - mean[n - 2]);
    const double ds = std::abs(widths::simplex_mean_sq_width(n, Source::closed) - mean_sq[n - 2]);
    v.require(dw <= 1e-12, "mean width n=" + std::to_string(n) + " off by " + fmt("%.2e", dw));
    v.require(ds <= 1e-12, "mean square n=" + std::to_string(n) + " off by " + fmt("%.2e", ds));
  }
}

void range_table(Verdict& v) {
  constexpr double mu_digits[] = {1.128, 1.692, 2.058, 2.325, 2.534, 2.704, 2.847};
  constexpr double nu_digits[] = {2.0, 3.653, 5.012, 6.156, 7.142, 8.007, 8.778};
  for (int n = 2; n <= 8; ++n) {
    const double mu = orderstats::mu_quadrature(n);
    const double nu = orderstats::nu_quadrature(n);
    v.require(truncates_to(mu, mu_digits[n - 2]), "mu n=" + std::to_string(n) + " = " + fmt("%.6f", mu));
    const bool nu_ok = n == 2 ? std::abs(nu - 2.0) <= 1e-12 : truncates_to(nu, nu_digits[n - 2]);
    v.require(nu_ok, "nu n=" + std::to_string(n) + " = " + fmt("%.6f", nu));
    if (n <= 7) {
      const double dmu = std::abs(orderstats::mu_closed(n) - mu);
      const double dnu = std::abs(orderstats::nu_closed(n) - nu);
      v.require(dmu <= 1e-9, "mu closed gap n=" + std::to_string(n) + " " + fmt("%.2e", dmu));
      v.require(dnu <= 1e-8, "nu closed gap n=" + std::to_string(n) + " " + fmt("%.2e", dnu));
    }
  }
}

void route_triangulation(Verdict& v) {
  double worst = 0.0;
  for (int n = 1; n <= 50; ++n) {
    worst = std::max(worst, std::abs(widths::simplex_mean_width(n, Source::quadrature) -
                                     widths::simplex_mean_width_hz(n)));
  }
  v.require(worst <= 1e-10, "route gap " + fmt("%.2e", worst));
  const double octa = 3.0 / specfn::kPi * std::acos(1.0 / 3.0);
  const double d = std::abs(widths::crosspolytope_mean_width(3) - octa);
  v.require(d <= 1e-10, "crosspolytope n=3 gap " + fmt("%.2e", d));
}

void octahedron(Verdict& v) {
  const double exact_mean = 3.0 / specfn::kPi * std::acos(1.0 / 3.0);
  const double exact_sq = 2.0 / 3.0 * (1.0 + 2.0 * std::sqrt(3.0) / specfn::kPi);
  const double d1 = std::abs(geom::octa_sphere_integral(1) - exact_mean);
  const double d2 = std::abs(geom::octa_sphere_integral(2) - exact_sq);
  v.require(d1 <= 1e-8, "sphere mean width gap " + fmt("%.2e", d1));
  v.require(d2 <= 1e-8, "sphere mean square gap " + fmt("%.2e", d2));
  const auto sector = geom::octa_sector_mean_sq();
  const double ds = std::abs(sector.mean_sq - exact_sq);
  v.require(ds <= 1e-10, "sector reconstruction gap " + fmt("%.2e", ds));
  v.require(sector.symmetry_factor > 0, "no integer symmetry factor");
  const double p0 = geom::octa_phi_boundary(0.0);
  const double p1 = geom::octa_phi_boundary(specfn::kPi / 4.0);
  v.require(std::abs(p0 - 2.3562) < 1e-4, "phi(0) = " + fmt("%.6f", p0));
  v.require(std::abs(p1 - 2.1862) < 1e-4, "phi(pi/4) = " + fmt("%.6f", p1));
}

void monte_carlo(Verdict& v) {
  constexpr std::int64_t kSamples = 1'000'000;
  constexpr std::uint64_t kSeed = geom::kDefaultSeed;
  struct Case {
    Family family;
    int lo;
    int hi;
  };
  const std::array<Case, 3> cases{{{Family::simplex, 2, 6}, {Family::cube, 1, 8},
                                   {Family::crosspolytope, 2, 8}}};
  for (const auto& c : cases) {
    for (int n = c.lo; n <= c.hi; ++n) {
      const std::string label = std::string(widths::to_string(c.family)) + " n=" + std::to_string(n);
      const auto est = geom::mc_width_moments(c.family, n, kSamples, kSeed);
      const auto rep = widths::width_report(c.family, n, Source::quadrature);
      const double z = std::abs(est.width.mean - rep.mean_width) /
                       std::max(est.width.std_error, 1e-12 * rep.mean_width);
      v.require(z <= 4.0, label + " mean width at " + fmt("%.2f", z) + " sigma");
      if (rep.mean_sq_width) {
        const double zs = std::abs(est.width_sq.mean - *rep.mean_sq_width) /
                          std::max(est.width_sq.std_error, 1e-12 * *rep.mean_sq_width);
        v.require(zs <= 4.0, label + " mean square at " + fmt("%.2f", zs) + " sigma");
      }
      const auto again = geom::mc_width_moments(c.family, n, kSamples, kSeed, 1);
      v.require(again.width.mean == est.width.mean && again.width.std_error == est.width.std_error &&
                    again.width_sq.mean == est.width_sq.mean &&
                    again.width_sq.std_error == est.width_sq.std_error,
                label + " rerun not bit-identical");
    }
  }
}

void asymptotic_checks(Verdict& v) {
  double worst = 0.0;
  for (double e = 0.3; e <= 9.0 + 1e-9; e += 0.1) {
    const double n = std::pow(10.0, e);
    worst = std::max(worst, std::abs(asymptotics::a_n_residual(n, asymptotics::a_n(n))));
  }
  v.require(worst <= 1e-12, "a_n residual " + fmt("%.2e", worst));

  const double gamma = specfn::kEulerGamma;
  const double pi = specfn::kPi;
  const double mass = asymptotics::limit_density_moment(0);
  const double mean = asymptotics::limit_density_moment(1);
  const double second = asymptotics::limit_density_moment(2);
  v.require(std::abs(mass - 1.0) <= 1e-10, "mass " + fmt("%.3e", mass - 1.0));
  v.require(std::abs(mean - 2.0 * gamma) <= 1e-8, "mean " + fmt("%.3e", mean - 2.0 * gamma));
  const double target = pi * pi / 3.0 + 4.0 * gamma * gamma;
  v.require(std::abs(second - target) <= 1e-7, "second moment " + fmt("%.3e", second - target));

  double prev = INFINITY;
  std::string errors;
  bool decreasing = true;
  for (int n : {10, 50, 100, 400}) {
    const double exact = widths::simplex_mean_width(n, Source::quadrature);
    const double rel = std::abs(asymptotics::simplex_mean_width_asymptotic(n) / exact - 1.0);
    errors += (errors.empty() ? "" : ", ") + fmt("%.4f", rel);
    decreasing = decreasing && rel < prev;
    prev = rel;
  }
  v.require(decreasing, "mean-width expansion relative errors not strictly decreasing (" +
                            errors + ")");
}

void properties(Verdict& v) {
  // Jensen; n = 1 holds with equality, so compare up to rounding.
  const double slack = 1.0 - 1e-14;
  for (int n = 1; n <= 30; ++n) {
    const double m = widths::simplex_mean_width(n, Source::quadrature);
    v.require(widths::simplex_mean_sq_width(n, Source::quadrature) >= m * m * slack,
              "Jensen simplex n=" + std::to_string(n));
    const double c = widths::cube_mean_width(n);
    v.require(widths::cube_mean_sq_width(n) >= c * c * slack, "Jensen cube n=" + std::to_string(n));
  }
  const double om = geom::octa_mean_width_exact();
  v.require(geom::octa_mean_sq_width_exact() >= om * om, "Jensen octahedron");

  std::mt19937_64 gen(48);
  std::normal_distribution<double> normal;
  std::array<int, 3> perm{0, 1, 2};
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 3> u{normal(gen), normal(gen), normal(gen)};
    const double r = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    for (auto& x : u) x /= r;
    const double g = geom::octa_g(u[0], u[1], u[2]);
    int images = 0;
    std::sort(perm.begin(), perm.end());
    do {
      for (int signs = 0; signs < 8; ++signs) {
        std::array<double, 3> w{};
        for (int k = 0; k < 3; ++k) w[k] = ((signs >> k) & 1 ? -1.0 : 1.0) * u[perm[k]];
        if (std::abs(geom::octa_g(w[0], w[1], w[2]) - g) > 1e-14 * g) {
          v.require(false, "g not invariant under a signed permutation");
        }
        ++images;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    v.require(images == 48, "symmetry group size");
  }

  geom::Rng rng(2718);
  for (int n = 2; n <= 8; ++n) {
    const auto simplex = geom::simplex_vertices(n);
    const auto cross = geom::crosspolytope_vertices(n);
    const double simplex_lo = 2.0 * widths::simplex_inradius(n);
    const double cross_lo = 2.0 * widths::crosspolytope_inradius(n);
    const double cube_hi = std::sqrt(static_cast<double>(n));
    int bad = 0;
    for (int k = 0; k < 10'000; ++k) {
      const auto u = geom::sample_direction(n, rng);
      const double ws = geom::support_width(simplex, u);
      const double wc = geom::support_width(cross, u);
      const double wq = geom::cube_support_width(u.components);
      bad += ws < simplex_lo - 1e-12 || ws > 1.0 + 1e-12;
      bad += wc < cross_lo - 1e-12 || wc > std::sqrt(2.0) + 1e-12;
      bad += wq < 1.0 - 1e-12 || wq > cube_hi + 1e-12;
    }
    v.require(bad == 0, "width bounds violated in dimension " + std::to_string(n));
  }

  for (std::int64_t n = 1; n <= 100'000; n = n < 100 ? n + 1 : n * 3) {
    const double d = std::abs(specfn::chi_mean(n) * specfn::gamma_ratio_half(n) - specfn::kSqrt2);
    v.require(d <= 1e-14, "chi identity n=" + std::to_string(n) + " off by " + fmt("%.2e", d));
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "golden simplex mean and mean square widths, n=2..6", 5.0, golden_widths);
  all &= run_criterion(2, "range moments table, quadrature vs printed and closed forms", 30.0,
                       range_table);
  all &= run_criterion(3, "simplex width routes and crosspolytope n=3", 30.0, route_triangulation);
  all &= run_criterion(4, "octahedron sphere integrals, sector reconstruction, boundary", 60.0,
                       octahedron);
  all &= run_criterion(5, "Monte Carlo triangulation at 1e6 samples, reproducible", 120.0,
                       monte_carlo);
  all &= run_criterion(6, "asymptotics: a_n, limit law moments, expansion error trend", 60.0,
                       asymptotic_checks);
  all &= run_criterion(7, "property suite", 60.0, properties);
  return all ? 0 : 1;
}
