#include "angleset/points.hpp"

#include <cmath>
#include <stdexcept>

namespace angleset {

LatticePointSet::LatticePointSet(std::uint32_t d) : d_(d) {
  if (d == 0 || d > kDimensionLimit) throw std::invalid_argument("LatticePointSet: bad dimension");
}

void LatticePointSet::add_point(std::span<const std::int64_t> coords) {
  if (coords.size() != d_) throw std::invalid_argument("LatticePointSet: coordinate count mismatch");
  for (std::int64_t x : coords) {
    if (x < -kCoordLimit || x > kCoordLimit)
      throw std::invalid_argument("LatticePointSet: coordinate exceeds exactness budget");
  }
  coords_.reserve(coords_.size() + d_);
  for (std::int64_t x : coords) coords_.push_back(static_cast<std::int32_t>(x));
}

void LatticePointSet::add_point(std::span<const std::int32_t> coords) {
  if (coords.size() != d_) throw std::invalid_argument("LatticePointSet: coordinate count mismatch");
  for (std::int32_t x : coords) {
    if (x < -kCoordLimit || x > kCoordLimit)
      throw std::invalid_argument("LatticePointSet: coordinate exceeds exactness budget");
  }
  coords_.insert(coords_.end(), coords.begin(), coords.end());
}

std::span<const std::int32_t> LatticePointSet::point(std::size_t i) const {
  return {coords_.data() + i * d_, d_};
}

std::int64_t LatticePointSet::squared_distance(std::size_t i, std::size_t j) const {
  auto a = point(i), b = point(j);
  std::int64_t sum = 0;
  for (std::uint32_t m = 0; m < d_; ++m) {
    std::int64_t diff = static_cast<std::int64_t>(a[m]) - b[m];
    sum += diff * diff;
  }
  return sum;
}

EuclideanPointSet::EuclideanPointSet(std::uint32_t d, Rational scale_sq, unsigned precision_bits)
    : d_(d), scale_sq_(std::move(scale_sq)), precision_bits_(precision_bits) {
  if (d == 0) throw std::invalid_argument("EuclideanPointSet: bad dimension");
  if (scale_sq_ <= 0) throw std::invalid_argument("EuclideanPointSet: scale_sq must be positive");
  if (precision_bits_ < 64) throw std::invalid_argument("EuclideanPointSet: precision below 64 bits");
}

void EuclideanPointSet::add_point(std::span<const Rational> coords) {
  if (coords.size() != d_) throw std::invalid_argument("EuclideanPointSet: coordinate count mismatch");
  for (const Rational& x : coords) {
    coords_.push_back(x);
    coords_.back().canonicalize();  // equality on rows relies on canonical form
  }
}

void EuclideanPointSet::add_point(std::span<const double> coords) {
  if (coords.size() != d_) throw std::invalid_argument("EuclideanPointSet: coordinate count mismatch");
  for (double x : coords) {
    if (!std::isfinite(x)) throw std::invalid_argument("EuclideanPointSet: non-finite coordinate");
    coords_.push_back(rational_from_double(x));
  }
}

std::span<const Rational> EuclideanPointSet::row(std::size_t i) const {
  return {coords_.data() + i * d_, d_};
}

Rational EuclideanPointSet::squared_distance(std::size_t i, std::size_t j) const {
  auto a = row(i), b = row(j);
  Rational sum(0);
  for (std::uint32_t m = 0; m < d_; ++m) {
    Rational diff = a[m] - b[m];
    sum += diff * diff;
  }
  sum *= scale_sq_;
  sum.canonicalize();
  return sum;
}

Rational EuclideanPointSet::centered_dot(std::size_t base, std::size_t i, std::size_t j) const {
  auto p0 = row(base), pi = row(i), pj = row(j);
  Rational sum(0);
  for (std::uint32_t m = 0; m < d_; ++m) sum += (pi[m] - p0[m]) * (pj[m] - p0[m]);
  sum *= scale_sq_;
  sum.canonicalize();
  return sum;
}

std::vector<double> EuclideanPointSet::point_double(std::size_t i) const {
  double scale = std::sqrt(scale_sq_.get_d());
  std::vector<double> out(d_);
  auto r = row(i);
  for (std::uint32_t m = 0; m < d_; ++m) out[m] = scale * r[m].get_d();
  return out;
}

}  // namespace angleset
