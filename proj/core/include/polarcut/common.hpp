#pragma once

#include <cmath>
#include <vector>

namespace polarcut {

// Global tolerances. Set-function values are doubles throughout; the closed-form
// families involve roots, so comparisons use these instead of exact arithmetic.
inline constexpr double kValueTol = 1e-9;       // set-function value comparisons
inline constexpr double kLpFeasTol = 1e-7;      // LP primal feasibility
inline constexpr double kLpOptTol = 1e-7;       // LP reduced-cost optimality
inline constexpr double kCutViolationTol = 1e-6;  // relative, cut emission
inline constexpr double kIntegralityTol = 1e-6; // LP value counts as 0/1
inline constexpr double kGapTol = 1e-9;         // relative, node fathoming

/// Relative cut-violation threshold at reference value `ref`.
inline double violation_threshold(double ref) {
  return kCutViolationTol * std::max(1.0, std::abs(ref));
}

/// Linear side constraint a'x <= b over the binary variables.
struct ConstraintRow {
  std::vector<double> coeffs;
  double rhs = 0.0;
};

}  // namespace polarcut
