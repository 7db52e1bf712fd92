#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "meanwidth/quad.hpp"
#include "meanwidth/widths.hpp"

// Geometric ground truth: explicit unit-edge polytopes, support-function
// widths along random directions, and the regular octahedron worked out
// from the nine-term diameter table of the union of six balls.

namespace meanwidth::geom {

/// Points in R^dimension stored row-major.
class VertexSet {
 public:
  VertexSet(int dimension, std::vector<double> coords);

  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] std::size_t size() const { return coords_.size() / dimension_; }
  [[nodiscard]] std::span<const double> vertex(std::size_t i) const {
    return {coords_.data() + i * dimension_, static_cast<std::size_t>(dimension_)};
  }

 private:
  int dimension_;
  std::vector<double> coords_;
};

/// Unit-edge regular n-simplex centred at its centroid: the scaled standard
/// basis of R^(n+1) expressed in an orthonormal (Helmert) basis of the
/// hyperplane orthogonal to (1, ..., 1).
VertexSet simplex_vertices(int n);

/// Unit cube [-1/2, 1/2]^n; n <= 20.
VertexSet cube_vertices(int n);

/// Unit-edge crosspolytope with vertices +-(1/sqrt 2) e_i.
VertexSet crosspolytope_vertices(int n);

/// xoshiro256** seeded through splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  /// Uniform on (0, 1).
  double uniform();
  /// Standard normal by the Box-Muller transform.
  double normal();

 private:
  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Unit vector in R^n.
struct Direction {
  std::vector<double> components;
};

/// Uniform direction on S^(n-1): normalised Gaussian vector.
Direction sample_direction(int n, Rng& rng);

/// max_v <v, u> - min_v <v, u>.  Throws DomainError on dimension mismatch.
double support_width(const VertexSet& vs, const Direction& u);

/// Width of the unit cube [-1/2, 1/2]^n along u: sum |u_i|.
double cube_support_width(std::span<const double> u);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

struct McWidthMoments {
  McEstimate width;
  McEstimate width_sq;
};

/// Samples drawn per RNG stream.  Stream c always covers samples
/// [c * kChunkSamples, (c + 1) * kChunkSamples), so the result depends only
/// on (family, n, samples, seed) and not on the number of workers.
inline constexpr std::int64_t kChunkSamples = 1 << 14;
inline constexpr std::uint64_t kDefaultSeed = 20111121;
inline constexpr std::int64_t kMinSamples = 1000;

/// Monte Carlo estimate of E(w) and E(w^2) for a unit-edge polytope.
/// workers = 0 uses the hardware concurrency.
McWidthMoments mc_width_moments(widths::Family family, int n, std::int64_t samples,
                                std::uint64_t seed = kDefaultSeed, int workers = 0);

// --- Regular octahedron ----------------------------------------------------
//
// Working model: vertices +-e_i (edge sqrt 2).  Widths of this octahedron
// equal diameters of the union of six balls of radius 1/2 centred at +-e_i/2;
// along the unit direction (a, b, c) the nine squared pairwise distances of
// the line's intersection points are the terms below.  The unit-edge width
// is sqrt(g / 2).

/// The nine terms, in the order 4a^2, 1-2ab-c^2, 1+2ab-c^2, 1-2ac-b^2,
/// 1+2ac-b^2, 4b^2, (b-c)^2, (b+c)^2, 4c^2.
std::array<double, 9> octa_g_terms(double a, double b, double c);

/// Maximum of the nine terms.  Throws DomainError unless a^2+b^2+c^2 = 1
/// within 1e-9.
double octa_g(double a, double b, double c);

/// (a, b, c) = (cos t sin p, sin t sin p, cos p).
std::array<double, 3> spherical_point(double theta, double phi);

/// (3/pi) arccos(1/3).
double octa_mean_width_exact();
/// (2/3)(1 + 2 sqrt(3)/pi).
double octa_mean_sq_width_exact();

/// (1 / 4 pi) * integral over theta in [0, 2 pi], phi in [0, pi] of
/// f(a, b, c) sin(phi).  When given, `regime` labels the smooth pieces of
/// f; the phi integrals are split wherever the label changes.
double sphere_average(const std::function<double(double, double, double)>& f,
                      const std::function<int(double, double, double)>& regime = {},
                      const quad::QuadConfig& cfg = {});

/// Sphere average of (g/2)^(power/2): the unit-edge octahedron's mean width
/// (power 1) or mean square width (power 2).
double octa_sphere_integral(int power, const quad::QuadConfig& cfg = {});

/// cos t + sqrt((3 + cos 2t) / 2), t in [0, pi/4].
double octa_h(double theta);

/// 2 arctan(h(theta)): where the first term 4a^2 meets the last term 4c^2.
double octa_phi_boundary(double theta);

/// Antiderivative in phi of (1/8 pi) g_1 sin(phi) along fixed theta.
double octa_sector_antiderivative(double theta, double phi);

/// Closed-form value of (1/8 pi) integral_{pi/2}^{phi(theta)} g_1 sin(phi) dphi.
double octa_sector_integrand(double theta);

struct SectorReconstruction {
  double sector_integral = 0.0;  // integral of octa_sector_integrand over [0, pi/4]
  int symmetry_factor = 0;       // number of congruent sectors
  double mean_sq = 0.0;          // symmetry_factor * sector_integral
};

/// Integrates the closed-form sector value and finds the integer number of
/// congruent copies that reconstructs the mean square width.  Throws
/// ConvergenceError if no integer in [1, 96] matches to 1e-10.
SectorReconstruction octa_sector_mean_sq(const quad::QuadConfig& cfg = {});

}  // namespace meanwidth::geom
