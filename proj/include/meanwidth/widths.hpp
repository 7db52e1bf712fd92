#pragma once

#include <optional>
#include <string_view>

#include "meanwidth/quad.hpp"

// Mean width and mean square width of regular polytopes with unit edges.
//
// The simplex routes go through the expected range of n + 1 normal samples
// (closed form for n <= 6, quadrature otherwise) and, independently, through
// a single Gaussian-weighted integral.  Mean square widths of the simplex
// for n > 6 and of the cube rest on a conjectured relation and are tagged
// as such.

namespace meanwidth::widths {

enum class Family { simplex, cube, crosspolytope };
enum class Source { closed, quadrature };
enum class Provenance { theorem, paper_conjecture, monte_carlo };

std::string_view to_string(Family f);
std::string_view to_string(Provenance p);
/// Parses "simplex", "cube" or "crosspolytope"; nullopt otherwise.
std::optional<Family> parse_family(std::string_view name);

/// Largest simplex dimension served by the closed-form source.
inline constexpr int kMaxClosedSimplexN = 6;
/// Largest simplex dimension for which the mean square relation has been
/// checked exactly; above it the value is tagged paper_conjecture.
inline constexpr int kMaxVerifiedMeanSqSimplexN = 6;

double simplex_circumradius(int n);
double simplex_inradius(int n);

/// (1/2) Gamma(n/2)/Gamma((n+1)/2) E(r_{n+1}).
double simplex_mean_width(int n, Source source, const quad::QuadConfig& cfg = {});

/// n(n+1)/(sqrt(2) pi) Gamma(n/2)/Gamma((n+1)/2)
///   * integral over R of exp(-2x^2) ((1 + erf x)/2)^(n-1).
double simplex_mean_width_hz(int n, const quad::QuadConfig& cfg = {});

/// E(r_{n+1}^2) / (2n).
double simplex_mean_sq_width(int n, Source source, const quad::QuadConfig& cfg = {});
Provenance simplex_mean_sq_provenance(int n);

enum class Scaling { circumradius, inradius };

/// Mean width after rescaling the simplex to unit circumradius or inradius.
double simplex_scaled_mean_width(int n, Scaling scaling, Source source = Source::quadrature,
                                 const quad::QuadConfig& cfg = {});

double cube_mean_width(int n);
/// 1 + 2(n-1)/pi, a conjecture except for n <= 2.
double cube_mean_sq_width(int n);
Provenance cube_mean_sq_provenance(int n);
double cube_circumradius(int n);
double cube_inradius(int n);

/// 2 sqrt(2) n(n-1)/pi Gamma(n/2)/Gamma((n+1)/2)
///   * integral_0^inf exp(-2x^2) erf(x)^(n-2), n >= 2.
double crosspolytope_mean_width(int n, const quad::QuadConfig& cfg = {});
double crosspolytope_circumradius(int n);
double crosspolytope_inradius(int n);

struct WidthReport {
  Family family = Family::simplex;
  int n = 0;
  double mean_width = 0.0;
  std::optional<double> mean_sq_width;
  Provenance mean_sq_provenance = Provenance::theorem;
  double circumradius = 0.0;
  double inradius = 0.0;
  double mean_width_circumscaled = 0.0;
  double mean_width_inscaled = 0.0;
};

/// Everything known in closed or quadrature form for one polytope.
/// `source` only affects the simplex; cube values are closed forms and the
/// crosspolytope is always a quadrature.
WidthReport width_report(Family family, int n, Source source, const quad::QuadConfig& cfg = {});

}  // namespace meanwidth::widths
