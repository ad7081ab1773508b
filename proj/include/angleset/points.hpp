#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "angleset/rational.hpp"

namespace angleset {

/// Points with integer coordinates. Coordinates are bounded so that squared
/// distances stay exactly representable in int64 for any dimension up to the
/// same bound.
class LatticePointSet {
 public:
  static constexpr std::int64_t kCoordLimit = std::int64_t{1} << 20;
  static constexpr std::uint32_t kDimensionLimit = std::uint32_t{1} << 20;

  explicit LatticePointSet(std::uint32_t d);

  void add_point(std::span<const std::int64_t> coords);
  void add_point(std::span<const std::int32_t> coords);

  std::uint32_t dimension() const { return d_; }
  std::size_t size() const { return coords_.size() / d_; }
  std::span<const std::int32_t> point(std::size_t i) const;
  std::span<const std::int32_t> flat() const { return coords_; }

  /// Exact squared Euclidean distance.
  std::int64_t squared_distance(std::size_t i, std::size_t j) const;

  friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;

 private:
  std::uint32_t d_;
  std::vector<std::int32_t> coords_;  // row-major n x d
};

/// Points with exact rational coordinates, optionally carrying a common
/// scale: the represented point set is sqrt(scale_sq) * rows. The scale makes
/// sets like the unit-distance regular simplex exactly representable, so the
/// angle predicates stay exact; it cancels out of every cosine.
class EuclideanPointSet {
 public:
  explicit EuclideanPointSet(std::uint32_t d, Rational scale_sq = Rational(1), unsigned precision_bits = 128);

  void add_point(std::span<const Rational> coords);
  void add_point(std::span<const double> coords);

  std::uint32_t dimension() const { return d_; }
  std::size_t size() const { return coords_.size() / d_; }
  std::span<const Rational> row(std::size_t i) const;
  const Rational& scale_sq() const { return scale_sq_; }
  unsigned precision_bits() const { return precision_bits_; }

  /// Exact squared distance of represented points (includes the scale).
  Rational squared_distance(std::size_t i, std::size_t j) const;

  /// Exact inner product <p_i - p_base, p_j - p_base> of represented points.
  Rational centered_dot(std::size_t base, std::size_t i, std::size_t j) const;

  /// Double-precision coordinates of the represented point i.
  std::vector<double> point_double(std::size_t i) const;

  friend bool operator==(const EuclideanPointSet&, const EuclideanPointSet&) = default;

 private:
  std::uint32_t d_;
  Rational scale_sq_;
  unsigned precision_bits_;
  std::vector<Rational> coords_;  // row-major n x d, unscaled
};

}  // namespace angleset
