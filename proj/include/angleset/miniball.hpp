#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "angleset/points.hpp"

namespace angleset {

struct Ball {
  std::vector<double> center;
  double radius = 0;
  std::vector<std::size_t> support;  // indices of the points determining the ball
};

/// Minimum enclosing ball of n points in R^d (row-major coordinates), via the
/// move-to-front/pivoting scheme with a QR-backed support solver. Accurate to
/// ~1e-12 relative; deterministic for a fixed input order. Requires n >= 1.
Ball smallest_enclosing_ball(std::span<const double> flat, std::size_t n, std::size_t d);

Ball smallest_enclosing_ball(const EuclideanPointSet& points);

}  // namespace angleset
