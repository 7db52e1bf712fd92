#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meanwidth/quad.hpp"

namespace meanwidth::verify {

struct CheckResult {
  std::string name;
  double deviation = 0.0;  // worst observed discrepancy
  double tolerance = 0.0;  // absolute, or standard errors for Monte Carlo checks
  bool monte_carlo = false;
  [[nodiscard]] bool passed() const { return deviation <= tolerance; }
};

/// Cross-checks every independent route against every other: closed forms
/// vs quadrature for the range moments, the two simplex mean-width
/// integrals, the octahedron sphere integrals and sector reconstruction,
/// and Monte Carlo estimates (within 4 standard errors) for all families.
std::vector<CheckResult> run_triangulation(std::int64_t mc_samples, std::uint64_t seed,
                                           int workers = 0);

}  // namespace meanwidth::verify
