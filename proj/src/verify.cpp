#include "meanwidth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "meanwidth/geom.hpp"
#include "meanwidth/orderstats.hpp"
#include "meanwidth/widths.hpp"

namespace meanwidth::verify {

namespace {

struct Worst {
  double deviation = 0.0;
  void update(double d) { deviation = std::max(deviation, std::abs(d)); }
};

// Standard errors of deviation.  A 1e-12 relative floor keeps zero-variance
// estimates (n = 1) from being judged on rounding alone.
double sigmas(const geom::McEstimate& e, double expected) {
  const double scale = std::max(e.std_error, 1e-12 * std::max(1.0, std::abs(expected)));
  return std::abs(e.mean - expected) / scale;
}

}  // namespace

std::vector<CheckResult> run_triangulation(std::int64_t mc_samples, std::uint64_t seed,
                                           int workers) {
  using widths::Family;
  using widths::Source;
  std::vector<CheckResult> out;

  Worst mu_gap;
  Worst nu_gap;
  for (int n = 2; n <= 7; ++n) {
    mu_gap.update(orderstats::mu_closed(n) - orderstats::mu_quadrature(n));
    nu_gap.update(orderstats::nu_closed(n) - orderstats::nu_quadrature(n));
  }
  out.push_back({"range_mu_closed_vs_quadrature", mu_gap.deviation, 1e-9});
  out.push_back({"range_nu_closed_vs_quadrature", nu_gap.deviation, 1e-8});

  Worst route_gap;
  for (int n = 1; n <= 50; ++n) {
    route_gap.update(widths::simplex_mean_width(n, Source::quadrature) -
                     widths::simplex_mean_width_hz(n));
  }
  out.push_back({"simplex_range_route_vs_hz_integral", route_gap.deviation, 1e-10});

  out.push_back({"crosspolytope3_vs_octahedron_exact",
                 std::abs(widths::crosspolytope_mean_width(3) - geom::octa_mean_width_exact()),
                 1e-10});
  out.push_back({"octahedron_sphere_mean_width",
                 std::abs(geom::octa_sphere_integral(1) - geom::octa_mean_width_exact()), 1e-8});
  out.push_back({"octahedron_sphere_mean_sq_width",
                 std::abs(geom::octa_sphere_integral(2) - geom::octa_mean_sq_width_exact()),
                 1e-8});
  const auto sector = geom::octa_sector_mean_sq();
  out.push_back({"octahedron_sector_reconstruction",
                 std::abs(sector.mean_sq - geom::octa_mean_sq_width_exact()), 1e-10});

  auto add_mc = [&](Family family, int lo, int hi) {
    Worst mean_sig;
    Worst sq_sig;
    for (int n = lo; n <= hi; ++n) {
      const auto est = geom::mc_width_moments(family, n, mc_samples, seed, workers);
      const auto rep = widths::width_report(family, n, Source::quadrature);
      mean_sig.update(sigmas(est.width, rep.mean_width));
      if (rep.mean_sq_width) sq_sig.update(sigmas(est.width_sq, *rep.mean_sq_width));
    }
    const std::string family_name(widths::to_string(family));
    out.push_back({"mc_" + family_name + "_mean_width_sigma", mean_sig.deviation, 4.0, true});
    if (family != Family::crosspolytope) {
      out.push_back({"mc_" + family_name + "_mean_sq_width_sigma", sq_sig.deviation, 4.0, true});
    }
  };
  add_mc(Family::simplex, 1, 8);
  add_mc(Family::cube, 1, 8);
  add_mc(Family::crosspolytope, 2, 8);
  return out;
}

}  // namespace meanwidth::verify
