#include "meanwidth/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "meanwidth/errors.hpp"

namespace meanwidth::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// 21-point Kronrod abscissae (positive half; last entry is the centre) and
// weights, with the embedded 10-point Gauss weights for the odd-indexed nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525054452, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  double roundoff = 0.0;

  bool operator<(const Segment& other) const { return error < other.error; }
};

double checked_eval(const Integrand& f, double x) {
  const double y = f(x);
  if (std::isnan(y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand returned NaN at x=" << x;
    throw ConvergenceError(msg.str());
  }
  return y;
}

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked_eval(f, centre);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked_eval(f, centre - dx);
    f2[j] = checked_eval(f, centre + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
  }
  const double scale = std::abs(half);
  resk *= half;
  resg *= half;
  resabs *= scale;
  resasc *= scale;

  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double roundoff = 50.0 * kEps * resabs;
  if (resabs > kTiny / (50.0 * kEps)) err = std::max(roundoff, err);
  return Segment{a, b, resk, err, roundoff};
}

void validate(const QuadConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be strictly positive");
  }
  if (cfg.max_subdivisions < 1) {
    throw DomainError("max_subdivisions must be >= 1");
  }
}

}  // namespace

QuadConfig QuadConfig::tightened(double factor) const {
  QuadConfig out = *this;
  out.abs_tol /= factor;
  out.rel_tol /= factor;
  return out;
}

QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  validate(cfg);
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: need finite a < b");
  }

  std::priority_queue<Segment> active;
  std::vector<Segment> frozen;  // too narrow to bisect further
  active.push(gauss_kronrod(f, a, b));
  std::int64_t evaluations = 21;

  double total = active.top().value;
  double error = active.top().error;
  double roundoff = active.top().roundoff;
  for (int splits = 0;; ++splits) {
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (error <= tol || error <= 2.0 * roundoff) break;
    if (active.empty() || splits >= cfg.max_subdivisions) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "integrate: no convergence on [" << a << ", " << b << "] after " << splits
          << " subdivisions (error estimate " << error << ", tolerance " << tol << ")";
      throw ConvergenceError(msg.str());
    }
    const Segment worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const double width_floor = 100.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b));
    if (worst.b - worst.a <= std::max(width_floor, kTiny) || mid <= worst.a || mid >= worst.b) {
      frozen.push_back(worst);
      continue;
    }
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    evaluations += 42;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    roundoff += left.roundoff + right.roundoff - worst.roundoff;
    active.push(left);
    active.push(right);
  }

  // Re-sum from the pieces so the running updates do not accumulate drift.
  double value = 0.0;
  double err = 0.0;
  std::vector<Segment> pieces = std::move(frozen);
  while (!active.empty()) {
    pieces.push_back(active.top());
    active.pop();
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Segment& l, const Segment& r) { return l.a < r.a; });
  for (const Segment& s : pieces) {
    value += s.value;
    err += s.error;
  }
  return QuadResult{value, err, evaluations};
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg) {
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: lower limit must be finite");
  const Integrand mapped = [&f, a](double t) {
    if (t >= 1.0) return 0.0;
    const double u = 1.0 - t;
    const double jac = 1.0 / (u * u);
    const double x = a + t / u;
    if (!std::isfinite(jac) || !std::isfinite(x)) return 0.0;
    const double fx = f(x);
    return fx == 0.0 ? 0.0 : fx * jac;
  };
  return integrate(mapped, 0.0, 1.0, cfg);
}

QuadResult integrate_real_line(const Integrand& f, const QuadConfig& cfg) {
  const Integrand mapped = [&f](double t) {
    if (std::abs(t) >= 1.0) return 0.0;
    const double u = 1.0 - t * t;
    const double jac = (1.0 + t * t) / (u * u);
    const double x = t / u;
    if (!std::isfinite(jac) || !std::isfinite(x)) return 0.0;
    const double fx = f(x);
    return fx == 0.0 ? 0.0 : fx * jac;
  };
  return integrate(mapped, -1.0, 1.0, cfg);
}

QuadResult integrate_2d(const Integrand2& f, const Region& region, const QuadConfig& cfg) {
  validate(cfg);
  const QuadConfig inner_cfg = cfg.tightened(10.0);
  std::int64_t evaluations = 0;
  double worst_inner = 0.0;

  auto account = [&](const QuadResult& r) {
    evaluations += r.evaluations;
    worst_inner = std::max(worst_inner, r.error_estimate);
    return r.value;
  };

  QuadResult outer;
  if (const auto* rect = std::get_if<Rectangle>(&region)) {
    outer = integrate(
        [&](double y) {
          return account(integrate([&](double x) { return f(x, y); }, rect->x0, rect->x1, inner_cfg));
        },
        rect->y0, rect->y1, cfg);
  } else if (const auto* slab = std::get_if<VerticalSlab>(&region)) {
    outer = integrate(
        [&](double y) {
          const double lo = slab->lower(y);
          const double hi = slab->upper(y);
          if (!(lo < hi)) return 0.0;
          return account(integrate([&](double x) { return f(x, y); }, lo, hi, inner_cfg));
        },
        slab->y0, slab->y1, cfg);
  } else {
    outer = integrate_real_line(
        [&](double y) {
          return account(
              integrate_semi_infinite([&](double s) { return f(y - s, y); }, 0.0, inner_cfg));
        },
        cfg);
  }
  outer.evaluations += evaluations;
  outer.error_estimate += worst_inner;
  return outer;
}

}  // namespace meanwidth::quad
