#include "meanwidth/widths.hpp"

#include <cmath>
#include <string>

#include "meanwidth/errors.hpp"
#include "meanwidth/orderstats.hpp"
#include "meanwidth/specfn.hpp"

namespace meanwidth::widths {

namespace {

using specfn::kPi;
using specfn::kSqrt2;

void require_dimension(int n, int min_n, const char* who) {
  if (n < min_n) {
    throw DomainError(std::string(who) + ": dimension must be >= " + std::to_string(min_n) +
                      ", got " + std::to_string(n));
  }
}

double range_mu(int m, Source source, const quad::QuadConfig& cfg) {
  return source == Source::closed ? orderstats::mu_closed(m) : orderstats::mu_quadrature(m, cfg);
}

double range_nu(int m, Source source, const quad::QuadConfig& cfg) {
  return source == Source::closed ? orderstats::nu_closed(m) : orderstats::nu_quadrature(m, cfg);
}

void require_closed_simplex(int n, Source source, const char* who) {
  if (source == Source::closed && n > kMaxClosedSimplexN) {
    throw DomainError(std::string(who) + ": closed form needs n <= " +
                      std::to_string(kMaxClosedSimplexN) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::simplex: return "simplex";
    case Family::cube: return "cube";
    case Family::crosspolytope: return "crosspolytope";
  }
  return "unknown";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::theorem: return "theorem";
    case Provenance::paper_conjecture: return "paper_conjecture";
    case Provenance::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "simplex") return Family::simplex;
  if (name == "cube") return Family::cube;
  if (name == "crosspolytope") return Family::crosspolytope;
  return std::nullopt;
}

double simplex_circumradius(int n) {
  require_dimension(n, 1, "simplex_circumradius");
  return std::sqrt(n / (2.0 * (n + 1.0)));
}

double simplex_inradius(int n) {
  require_dimension(n, 1, "simplex_inradius");
  return std::sqrt(1.0 / (2.0 * n * (n + 1.0)));
}

double simplex_mean_width(int n, Source source, const quad::QuadConfig& cfg) {
  require_dimension(n, 1, "simplex_mean_width");
  require_closed_simplex(n, source, "simplex_mean_width");
  return 0.5 * specfn::gamma_ratio_half(n) * range_mu(n + 1, source, cfg);
}

double simplex_mean_width_hz(int n, const quad::QuadConfig& cfg) {
  require_dimension(n, 1, "simplex_mean_width_hz");
  // (1 + erf x)/2 is the normal distribution function at sqrt(2) x.
  const auto r = quad::integrate_real_line(
      [n](double x) {
        const double log_body = -2.0 * x * x + (n - 1) * specfn::log_normal_cdf(kSqrt2 * x);
        return std::exp(log_body);
      },
      cfg);
  return n * (n + 1.0) / (kSqrt2 * kPi) * specfn::gamma_ratio_half(n) * r.value;
}

double simplex_mean_sq_width(int n, Source source, const quad::QuadConfig& cfg) {
  require_dimension(n, 1, "simplex_mean_sq_width");
  require_closed_simplex(n, source, "simplex_mean_sq_width");
  return range_nu(n + 1, source, cfg) / (2.0 * n);
}

Provenance simplex_mean_sq_provenance(int n) {
  return n <= kMaxVerifiedMeanSqSimplexN ? Provenance::theorem : Provenance::paper_conjecture;
}

double simplex_scaled_mean_width(int n, Scaling scaling, Source source,
                                 const quad::QuadConfig& cfg) {
  const double w = simplex_mean_width(n, source, cfg);
  return scaling == Scaling::circumradius ? w / simplex_circumradius(n) : w / simplex_inradius(n);
}

double cube_mean_width(int n) {
  require_dimension(n, 1, "cube_mean_width");
  return n / specfn::kSqrtPi * specfn::gamma_ratio_half(n);
}

double cube_mean_sq_width(int n) {
  require_dimension(n, 1, "cube_mean_sq_width");
  return 1.0 + 2.0 * (n - 1) / kPi;
}

Provenance cube_mean_sq_provenance(int n) {
  // n = 1 is trivial and n = 2 is an elementary angular integral.
  return n <= 2 ? Provenance::theorem : Provenance::paper_conjecture;
}

double cube_circumradius(int n) {
  require_dimension(n, 1, "cube_circumradius");
  return 0.5 * std::sqrt(static_cast<double>(n));
}

double cube_inradius(int n) {
  require_dimension(n, 1, "cube_inradius");
  return 0.5;
}

double crosspolytope_mean_width(int n, const quad::QuadConfig& cfg) {
  if (n < 2) {
    throw DomainError(
        "crosspolytope_mean_width: n must be >= 2 (the integral formula degenerates for the "
        "segment), got " +
        std::to_string(n));
  }
  const int power = n - 2;
  const bool use_logs = n > 60;
  const auto r = quad::integrate_semi_infinite(
      [power, use_logs](double x) {
        const double gauss = -2.0 * x * x;
        if (power == 0) return std::exp(gauss);
        const double e = std::erf(x);
        if (e <= 0.0) return 0.0;
        if (use_logs) return std::exp(gauss + power * std::log(e));
        return std::exp(gauss) * std::pow(e, power);
      },
      0.0, cfg);
  return 2.0 * kSqrt2 * n * (n - 1.0) / kPi * specfn::gamma_ratio_half(n) * r.value;
}

double crosspolytope_circumradius(int n) {
  require_dimension(n, 2, "crosspolytope_circumradius");
  return 1.0 / kSqrt2;
}

double crosspolytope_inradius(int n) {
  require_dimension(n, 2, "crosspolytope_inradius");
  return 1.0 / std::sqrt(2.0 * n);
}

WidthReport width_report(Family family, int n, Source source, const quad::QuadConfig& cfg) {
  WidthReport rep;
  rep.family = family;
  rep.n = n;
  switch (family) {
    case Family::simplex:
      rep.mean_width = simplex_mean_width(n, source, cfg);
      rep.mean_sq_width = simplex_mean_sq_width(n, source, cfg);
      rep.mean_sq_provenance = simplex_mean_sq_provenance(n);
      rep.circumradius = simplex_circumradius(n);
      rep.inradius = simplex_inradius(n);
      break;
    case Family::cube:
      rep.mean_width = cube_mean_width(n);
      rep.mean_sq_width = cube_mean_sq_width(n);
      rep.mean_sq_provenance = cube_mean_sq_provenance(n);
      rep.circumradius = cube_circumradius(n);
      rep.inradius = cube_inradius(n);
      break;
    case Family::crosspolytope:
      rep.mean_width = crosspolytope_mean_width(n, cfg);
      rep.circumradius = crosspolytope_circumradius(n);
      rep.inradius = crosspolytope_inradius(n);
      break;
  }
  rep.mean_width_circumscaled = rep.mean_width / rep.circumradius;
  rep.mean_width_inscaled = rep.mean_width / rep.inradius;
  return rep;
}

}  // namespace meanwidth::widths
