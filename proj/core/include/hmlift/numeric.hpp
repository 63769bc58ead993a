#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmlift/expr.hpp"

namespace hmlift {

// Floating-point evidence (not proof) for harmonicity and horizontal weak
// conformality of closed-form maps.

inline constexpr double kNumericPassTolerance = 1e-8;
inline constexpr double kNumericFailThreshold = 1e-3;
inline constexpr double kFiniteDifferenceStep = 1e-6;
inline constexpr double kFiniteDifferenceMismatch = 1e-4;
inline constexpr double kGuardMargin = 1e-6;

using Point = std::vector<double>;
using Box = std::vector<std::pair<double, double>>;

struct ResidualReport {
  std::vector<Point> points;
  std::vector<double> laplacian_residuals;  // per component, max |Laplacian| over points
  double conformality_residual = 0.0;       // max |G_kl - lambda^2 delta_kl|
  double max_lambda2 = 0.0;
  double min_lambda2 = 0.0;
  double fd_mismatch = 0.0;  // worst relative symbolic-vs-difference gap at the first point
  double tolerance = kNumericPassTolerance;
  bool pass = true;
  std::optional<Point> witness;  // first point with a residual above tolerance
  std::string failing_check;     // "laplacian" or "conformality"
  bool borderline = false;       // worst residual in (tolerance, fail threshold)

  double max_laplacian_residual() const;
  double worst_residual() const;
};

ResidualReport numeric_check(const SmoothMap& phi, const std::vector<Point>& points,
                             double tolerance = kNumericPassTolerance);

// Component k = sum_j d phi^k/dx_j * y_j on R^{2m}; guards carry over.
SmoothMap numeric_complete_lift(const SmoothMap& phi);

// Deterministic uniform draws from the box, rejecting points whose guards
// are below kGuardMargin or that fail to evaluate.
std::vector<Point> sample_points(const SmoothMap& phi, std::size_t count, std::uint64_t seed, const Box& box);

}  // namespace hmlift
