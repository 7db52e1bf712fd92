#pragma once

#include <cstdint>
#include <functional>
#include <variant>

namespace meanwidth::quad {

struct QuadConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;

  /// Copy with both tolerances divided by `factor` (used for inner integrals).
  [[nodiscard]] QuadConfig tightened(double factor) const;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

using Integrand = std::function<double(double)>;
using Integrand2 = std::function<double(double, double)>;

/// Adaptive 21-point Gauss-Kronrod integration of f over [a, b].
///
/// Bisects the interval with the largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|), or below the
/// rounding floor of the integrand, whichever is larger.  Throws
/// ConvergenceError when the subdivision budget runs out or f returns NaN,
/// DomainError when the interval or configuration is invalid.
QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg = {});

/// Integral over [a, inf) via x = a + t / (1 - t), t in [0, 1).
QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg = {});

/// Integral over the real line via x = t / (1 - t^2), t in (-1, 1).
QuadResult integrate_real_line(const Integrand& f, const QuadConfig& cfg = {});

/// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rectangle {
  double x0, x1, y0, y1;
};

/// The region {(x, y) : y0 <= y <= y1, lower(y) <= x <= upper(y)}, which
/// covers triangles and other regions bounded by graphs over y.
struct VerticalSlab {
  double y0, y1;
  std::function<double(double)> lower;
  std::function<double(double)> upper;
};

/// The unbounded half-plane {(x, y) : x < y}.  The inner integral runs
/// over x = y - s, s in (0, inf); the outer over the whole real line.
struct BelowDiagonal {};

using Region = std::variant<Rectangle, VerticalSlab, BelowDiagonal>;

/// Iterated adaptive integration of f(x, y): outer over y, inner over x.
/// Inner integrals use tolerances ten times tighter than cfg.
QuadResult integrate_2d(const Integrand2& f, const Region& region, const QuadConfig& cfg = {});

}  // namespace meanwidth::quad
