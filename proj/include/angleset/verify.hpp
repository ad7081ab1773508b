#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "angleset/miniball.hpp"
#include "angleset/points.hpp"
#include "angleset/threshold.hpp"

namespace angleset::verify {

struct VerifyOptions {
  std::size_t max_points = 4096;     // the scan is cubic; refuse beyond this
  unsigned threads = 0;              // 0 = environment default
  double borderline_tolerance = 1e-9;
};

/// Result of the exhaustive apex-triple scan. The verdict is decided by exact
/// arithmetic; max_angle/argmax are double-precision reporting fields.
struct AngleCertificate {
  std::size_t n = 0;
  double alpha_radians = 0;
  Mode mode = Mode::Strict;
  bool pass = false;
  double max_angle = 0;
  std::array<std::size_t, 3> argmax_triple{};  // (i, j, k) with apex j
  std::size_t borderline_count = 0;  // triples that needed the exact path
  std::size_t undecided_count = 0;   // still inseparable at max precision (forces fail)
  std::size_t violation_count = 0;   // triples violating the mode's requirement
};

/// Scans all n(n-1)(n-2)/2 apex-triples against the threshold. Requires
/// n >= 3 and pairwise-distinct points; coincident points are rejected.
/// Triples whose double-precision margin is inside the borderline tolerance
/// (or inside the per-triple rounding error bound) are decided exactly via
/// AngleThreshold::compare_angle.
AngleCertificate max_angle(const LatticePointSet& points, const AngleThreshold& threshold,
                           Mode mode, const VerifyOptions& options = {});
AngleCertificate max_angle(const EuclideanPointSet& points, const AngleThreshold& threshold,
                           Mode mode, const VerifyOptions& options = {});

/// Exact extreme squared distances with witnesses. Requires n >= 2 and
/// pairwise-distinct points.
struct DistanceStats {
  Rational min_sq;
  Rational max_sq;
  std::array<std::size_t, 2> argmin{};
  std::array<std::size_t, 2> argmax{};
  double ratio = 0;  // sqrt(min_sq / max_sq)
};
DistanceStats distance_stats(const LatticePointSet& points);
DistanceStats distance_stats(const EuclideanPointSet& points);

/// Consequence check: a set whose angles all stay below π/3 + c must have
/// min/max distance ratio above 1 - 3.488c (meaningful for c < 0.024), so a
/// failure here convicts the angle property. The verdict is an exact rational
/// comparison; margin is informational.
struct RatioCheck {
  bool pass = false;
  double ratio = 0;
  double floor_value = 0;  // 1 - 3.488c
  double margin = 0;       // ratio - floor_value
};
RatioCheck check_min_max_ratio(const DistanceStats& stats, const Rational& c);
RatioCheck check_min_max_ratio(const LatticePointSet& points, const Rational& c);
RatioCheck check_min_max_ratio(const EuclideanPointSet& points, const Rational& c);

/// Central projection of interior points onto the ball's boundary sphere:
/// each point maps to the ray-sphere intersection beyond it. Requires every
/// point inside the closed ball and none at the center. Alongside the image,
/// reports the expansion property: every pair at distance above the radius
/// must move strictly further apart.
struct ProjectionResult {
  EuclideanPointSet points;
  std::size_t pairs_above_radius = 0;
  std::size_t pairs_expanded = 0;
  bool expansion_holds = false;  // pairs_expanded == pairs_above_radius
};
ProjectionResult project_to_sphere(const EuclideanPointSet& points, const Ball& ball);

}  // namespace angleset::verify
