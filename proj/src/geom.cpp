#include "meanwidth/geom.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "meanwidth/errors.hpp"
#include "meanwidth/specfn.hpp"

namespace meanwidth::geom {

namespace {

using specfn::kPi;
using specfn::kSqrt2;
using specfn::kSqrt3;

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

double dot(std::span<const double> v, std::span<const double> u) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * u[i];
  return s;
}

double support_width_span(const VertexSet& vs, std::span<const double> u) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const double p = dot(vs.vertex(i), u);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return hi - lo;
}

// Running mean and sum of squared deviations, merged pairwise.
struct Moments {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    const auto total = count + other.count;
    const double delta = other.mean - mean;
    const double w = static_cast<double>(other.count) / static_cast<double>(total);
    mean += delta * w;
    m2 += other.m2 + delta * delta * static_cast<double>(count) * w;
    count = total;
  }

  [[nodiscard]] McEstimate estimate(std::uint64_t seed) const {
    McEstimate e;
    e.mean = mean;
    e.samples = count;
    e.seed = seed;
    if (count > 1) {
      const double var = m2 / static_cast<double>(count - 1);
      e.std_error = std::sqrt(var / static_cast<double>(count));
    }
    return e;
  }
};

struct ChunkMoments {
  Moments width;
  Moments width_sq;
};

void require_unit(double a, double b, double c) {
  if (std::abs(a * a + b * b + c * c - 1.0) > 1e-9) {
    throw DomainError("octa_g: (a, b, c) must be a unit vector");
  }
}

}  // namespace

VertexSet::VertexSet(int dimension, std::vector<double> coords)
    : dimension_(dimension), coords_(std::move(coords)) {
  if (dimension_ < 1) throw DomainError("VertexSet: dimension must be >= 1");
  if (coords_.size() % static_cast<std::size_t>(dimension_) != 0) {
    throw DomainError("VertexSet: coordinate count is not a multiple of the dimension");
  }
}

VertexSet simplex_vertices(int n) {
  if (n < 1) throw DomainError("simplex_vertices: n must be >= 1");
  // Vertex i is e_i / sqrt(2) in R^(n+1).  Row k (1 <= k <= n) of the
  // Helmert basis is (1, ..., 1, -k, 0, ..., 0) / sqrt(k (k + 1)) with k
  // leading ones; these rows are orthonormal and orthogonal to (1, ..., 1),
  // so coordinate k of vertex i is H[k][i] / sqrt(2).
  const int m = n + 1;
  std::vector<double> coords(static_cast<std::size_t>(m) * n, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int k = 1; k <= n; ++k) {
      const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
      double h = 0.0;
      if (i < k) {
        h = 1.0 / norm;
      } else if (i == k) {
        h = -static_cast<double>(k) / norm;
      }
      coords[static_cast<std::size_t>(i) * n + (k - 1)] = h / kSqrt2;
    }
  }
  return VertexSet(n, std::move(coords));
}

VertexSet cube_vertices(int n) {
  if (n < 1 || n > 20) throw DomainError("cube_vertices: n must be in [1, 20]");
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> coords(count * n);
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (int j = 0; j < n; ++j) {
      coords[mask * n + j] = ((mask >> j) & 1U) ? 0.5 : -0.5;
    }
  }
  return VertexSet(n, std::move(coords));
}

VertexSet crosspolytope_vertices(int n) {
  if (n < 1) throw DomainError("crosspolytope_vertices: n must be >= 1");
  std::vector<double> coords(static_cast<std::size_t>(2 * n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    coords[static_cast<std::size_t>(2 * j) * n + j] = 1.0 / kSqrt2;
    coords[static_cast<std::size_t>(2 * j + 1) * n + j] = -1.0 / kSqrt2;
  }
  return VertexSet(n, std::move(coords));
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed;
  std::uint64_t salt = stream;
  x ^= splitmix64(salt);
  for (auto& s : state_) s = splitmix64(x);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double t = 2.0 * kPi * uniform();
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

Direction sample_direction(int n, Rng& rng) {
  if (n < 1) throw DomainError("sample_direction: n must be >= 1");
  Direction d;
  d.components.resize(static_cast<std::size_t>(n));
  for (;;) {
    double norm2 = 0.0;
    for (auto& x : d.components) {
      x = rng.normal();
      norm2 += x * x;
    }
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (auto& x : d.components) x *= inv;
      return d;
    }
  }
}

double support_width(const VertexSet& vs, const Direction& u) {
  if (static_cast<std::size_t>(vs.dimension()) != u.components.size()) {
    throw DomainError("support_width: dimension mismatch (" + std::to_string(vs.dimension()) +
                      " vs " + std::to_string(u.components.size()) + ")");
  }
  return support_width_span(vs, u.components);
}

double cube_support_width(std::span<const double> u) {
  double s = 0.0;
  for (double x : u) s += std::abs(x);
  return s;
}

McWidthMoments mc_width_moments(widths::Family family, int n, std::int64_t samples,
                                std::uint64_t seed, int workers) {
  if (samples < kMinSamples) {
    throw DomainError("mc_width_moments: samples must be >= " + std::to_string(kMinSamples));
  }
  const int min_n = family == widths::Family::crosspolytope ? 2 : 1;
  if (n < min_n) {
    throw DomainError("mc_width_moments: dimension must be >= " + std::to_string(min_n));
  }

  std::optional<VertexSet> body;
  if (family == widths::Family::simplex) body = simplex_vertices(n);
  if (family == widths::Family::crosspolytope) body = crosspolytope_vertices(n);

  const std::int64_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
  std::vector<ChunkMoments> results(static_cast<std::size_t>(chunks));

  auto run_chunk = [&](std::int64_t c) {
    Rng rng(seed, static_cast<std::uint64_t>(c));
    const std::int64_t begin = c * kChunkSamples;
    const std::int64_t end = std::min(samples, begin + kChunkSamples);
    ChunkMoments acc;
    for (std::int64_t i = begin; i < end; ++i) {
      const Direction u = sample_direction(n, rng);
      const double w = body ? support_width_span(*body, u.components)
                            : cube_support_width(u.components);
      acc.width.add(w);
      acc.width_sq.add(w * w);
    }
    results[static_cast<std::size_t>(c)] = acc;
  };

  int threads = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::clamp<std::int64_t>(threads, 1, chunks));
  if (threads == 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::int64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }

  ChunkMoments total;
  for (const auto& r : results) {
    total.width.merge(r.width);
    total.width_sq.merge(r.width_sq);
  }
  return {total.width.estimate(seed), total.width_sq.estimate(seed)};
}

std::array<double, 9> octa_g_terms(double a, double b, double c) {
  return {4.0 * a * a,         1.0 - 2.0 * a * b - c * c, 1.0 + 2.0 * a * b - c * c,
          1.0 - 2.0 * a * c - b * b, 1.0 + 2.0 * a * c - b * b, 4.0 * b * b,
          (b - c) * (b - c),   (b + c) * (b + c),         4.0 * c * c};
}

double octa_g(double a, double b, double c) {
  require_unit(a, b, c);
  const auto terms = octa_g_terms(a, b, c);
  return *std::max_element(terms.begin(), terms.end());
}

std::array<double, 3> spherical_point(double theta, double phi) {
  const double s = std::sin(phi);
  return {std::cos(theta) * s, std::sin(theta) * s, std::cos(phi)};
}

double octa_mean_width_exact() { return 3.0 / kPi * std::acos(1.0 / 3.0); }

double octa_mean_sq_width_exact() { return 2.0 / 3.0 * (1.0 + 2.0 * kSqrt3 / kPi); }

namespace {

// Bisects for the point in (lo, hi) where the regime label changes.
double locate_switch(const std::function<double(double)>& where, double lo, double hi) {
  const double label_lo = where(lo);
  for (int i = 0; i < 60 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (where(mid) == label_lo ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

constexpr int kRegimeScan = 2048;

}  // namespace

double sphere_average(const std::function<double(double, double, double)>& f,
                      const std::function<int(double, double, double)>& regime,
                      const quad::QuadConfig& cfg) {
  // Cutting theta at multiples of pi/4 and phi at the equator puts the
  // coordinate symmetry planes on piece boundaries.  Inside a piece the
  // integrand can switch regime across slivers narrower than a Kronrod
  // panel, so the phi range is cut wherever the regime label changes.
  const quad::QuadConfig inner_cfg = cfg.tightened(10.0);
  const auto inner = [&](double theta, double phi0, double phi1) {
    const auto integrand = [&](double phi) {
      const auto p = spherical_point(theta, phi);
      return f(p[0], p[1], p[2]) * std::sin(phi);
    };
    std::vector<double> cuts{phi0};
    if (regime) {
      const auto label = [&](double phi) {
        const auto p = spherical_point(theta, phi);
        return static_cast<double>(regime(p[0], p[1], p[2]));
      };
      const double step = (phi1 - phi0) / kRegimeScan;
      double prev = label(phi0);
      for (int k = 1; k <= kRegimeScan; ++k) {
        const double phi = k == kRegimeScan ? phi1 : phi0 + k * step;
        const double cur = label(phi);
        if (cur != prev) cuts.push_back(locate_switch(label, phi - step, phi));
        prev = cur;
      }
    }
    cuts.push_back(phi1);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (cuts[k + 1] > cuts[k]) sum += quad::integrate(integrand, cuts[k], cuts[k + 1], inner_cfg).value;
    }
    return sum;
  };
  double total = 0.0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double phi0 = j * kPi / 2.0;
      const double phi1 = (j + 1) * kPi / 2.0;
      total += quad::integrate([&](double theta) { return inner(theta, phi0, phi1); },
                               i * kPi / 4.0, (i + 1) * kPi / 4.0, cfg)
                   .value;
    }
  }
  return total / (4.0 * kPi);
}

double octa_sphere_integral(int power, const quad::QuadConfig& cfg) {
  if (power != 1 && power != 2) throw DomainError("octa_sphere_integral: power must be 1 or 2");
  return sphere_average(
      [power](double a, double b, double c) {
        const double half_g = 0.5 * octa_g(a, b, c);
        return power == 1 ? std::sqrt(half_g) : half_g;
      },
      [](double a, double b, double c) {
        const auto terms = octa_g_terms(a, b, c);
        return static_cast<int>(std::max_element(terms.begin(), terms.end()) - terms.begin());
      },
      cfg);
}

double octa_h(double theta) {
  if (!(theta >= -1e-12 && theta <= kPi / 4.0 + 1e-12)) {
    throw DomainError("octa_h: theta must lie in [0, pi/4]");
  }
  return std::cos(theta) + std::sqrt((3.0 + std::cos(2.0 * theta)) / 2.0);
}

double octa_phi_boundary(double theta) { return 2.0 * std::atan(octa_h(theta)); }

double octa_sector_antiderivative(double theta, double phi) {
  return (1.0 + std::cos(2.0 * theta)) * (std::cos(3.0 * phi) - 9.0 * std::cos(phi)) /
         (48.0 * kPi);
}

double octa_sector_integrand(double theta) {
  const double h = octa_h(theta);
  const double h2 = h * h;
  const double q = 1.0 + h2;
  return (h2 * h2 + 4.0 * h2 + 1.0) * (h2 - 1.0) * (1.0 + std::cos(2.0 * theta)) /
         (6.0 * kPi * q * q * q);
}

SectorReconstruction octa_sector_mean_sq(const quad::QuadConfig& cfg) {
  SectorReconstruction out;
  out.sector_integral = quad::integrate(octa_sector_integrand, 0.0, kPi / 4.0, cfg).value;
  const double target = octa_mean_sq_width_exact();
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 96; ++k) {
    const double miss = std::abs(k * out.sector_integral - target);
    if (miss < best) {
      best = miss;
      out.symmetry_factor = k;
    }
  }
  out.mean_sq = out.symmetry_factor * out.sector_integral;
  if (!(best <= 1e-10)) {
    throw ConvergenceError("octa_sector_mean_sq: no integer symmetry factor reconstructs the "
                           "mean square width (closest " +
                           std::to_string(out.symmetry_factor) + ")");
  }
  return out;
}

}  // namespace meanwidth::geom
