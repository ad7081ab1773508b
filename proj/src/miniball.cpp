#include "angleset/miniball.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace angleset {

namespace {

// Support-walking solver: keep an affinely independent support set lying on
// the boundary of the current ball and walk the center toward the support's
// circumcenter. A non-support point that reaches the shrinking boundary stops
// the walk and joins the support; a support point whose affine coefficient in
// the circumcenter turns negative is dropped. At the fixed point the center
// is the circumcenter of its support with non-negative coefficients and all
// points are inside, which is the optimality condition for the smallest
// enclosing ball. Unlike the move-to-front recursion, this stays fast when
// every input point is on the final boundary (regular simplexes and other
// cospherical sets).
class Walker {
 public:
  Walker(std::span<const double> flat, std::size_t n, std::size_t d)
      : flat_(flat), n_(n), d_(d), center_(d) {}

  Ball run() {
    center_ = point(0);
    std::size_t farthest = 0;
    double best = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      double e = (point(i) - center_).squaredNorm();
      if (e > best) {
        best = e;
        farthest = i;
      }
    }
    support_ = {farthest};
    radius_sq_ = best;

    const std::size_t max_iterations = 64 * (n_ + d_ + 8);
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
      Eigen::VectorXd target = circumcenter();
      Eigen::VectorXd u = target - center_;
      double step_sq = u.squaredNorm();
      if (step_sq <= 1e-26 * (radius_sq_ + 1e-30)) {
        if (!drop_negative_support()) break;  // optimal
        continue;
      }

      // Largest step that keeps every point inside; the distance to every
      // support point stays common along the segment.
      const Eigen::VectorXd anchor = point(support_[0]);
      double lambda = 1.0;
      std::size_t stopper = npos_;
      for (std::size_t p = 0; p < n_; ++p) {
        if (in_support(p)) continue;
        Eigen::VectorXd pp = point(p);
        double slack = (center_ - pp).squaredNorm() - (center_ - anchor).squaredNorm();
        double growth = 2.0 * u.dot(anchor - pp);
        if (growth <= 1e-15 * (radius_sq_ + 1.0)) continue;  // p never catches the boundary
        double cap = -slack / growth;
        if (cap < lambda) {
          lambda = cap;
          stopper = p;
        }
      }
      if (lambda < 0) lambda = 0;
      center_ += lambda * u;
      radius_sq_ = (center_ - anchor).squaredNorm();
      if (stopper != npos_) {
        if (!add_support(stopper)) {
          // Affinely dependent stopper: make room by dropping the weakest
          // support member, then retry on the next sweep.
          if (!drop_negative_support() && !drop_smallest_coefficient()) break;
        }
      } else if (lambda >= 1.0) {
        if (!drop_negative_support()) break;  // reached the circumcenter, all coefficients fine
      }
    }

    Ball ball;
    ball.center.assign(center_.data(), center_.data() + d_);
    // tighten the radius to the true farthest point
    double r_sq = 0;
    for (std::size_t i = 0; i < n_; ++i)
      r_sq = std::max(r_sq, (point(i) - center_).squaredNorm());
    ball.radius = std::sqrt(r_sq);
    ball.support = support_;
    return ball;
  }

 private:
  static constexpr std::size_t npos_ = static_cast<std::size_t>(-1);

  Eigen::Map<const Eigen::VectorXd> point(std::size_t i) const {
    return Eigen::Map<const Eigen::VectorXd>(flat_.data() + i * d_, d_);
  }

  bool in_support(std::size_t idx) const {
    for (std::size_t s : support_)
      if (s == idx) return true;
    return false;
  }

  // Circumcenter of the support within its affine hull.
  Eigen::VectorXd circumcenter() const {
    std::size_t m = support_.size();
    Eigen::VectorXd q0 = point(support_[0]);
    if (m == 1) return q0;
    Eigen::MatrixXd v(d_, m - 1);
    Eigen::VectorXd rhs(m - 1);
    for (std::size_t i = 1; i < m; ++i) {
      v.col(i - 1) = point(support_[i]) - q0;
      rhs[i - 1] = v.col(i - 1).squaredNorm();
    }
    Eigen::MatrixXd gram = 2.0 * v.transpose() * v;
    Eigen::VectorXd lambda = gram.ldlt().solve(rhs);
    return q0 + v * lambda;
  }

  // Affine coefficients of the current center over the support (valid when
  // the center lies in the support's affine hull, i.e. at a circumcenter).
  Eigen::VectorXd coefficients() const {
    std::size_t m = support_.size();
    Eigen::VectorXd gamma(m);
    if (m == 1) {
      gamma[0] = 1;
      return gamma;
    }
    Eigen::VectorXd q0 = point(support_[0]);
    Eigen::MatrixXd v(d_, m - 1);
    for (std::size_t i = 1; i < m; ++i) v.col(i - 1) = point(support_[i]) - q0;
    Eigen::VectorXd tail = v.colPivHouseholderQr().solve(center_ - q0);
    gamma[0] = 1 - tail.sum();
    gamma.tail(m - 1) = tail;
    return gamma;
  }

  bool drop_negative_support() {
    if (support_.size() <= 1) return false;
    Eigen::VectorXd gamma = coefficients();
    int worst = -1;
    double min_gamma = -1e-12;
    for (std::size_t i = 0; i < support_.size(); ++i)
      if (gamma[i] < min_gamma) {
        min_gamma = gamma[i];
        worst = static_cast<int>(i);
      }
    if (worst < 0) return false;
    support_.erase(support_.begin() + worst);
    return true;
  }

  bool drop_smallest_coefficient() {
    if (support_.size() <= 1) return false;
    Eigen::VectorXd gamma = coefficients();
    std::size_t worst = 0;
    for (std::size_t i = 1; i < support_.size(); ++i)
      if (gamma[i] < gamma[worst]) worst = i;
    support_.erase(support_.begin() + worst);
    return true;
  }

  bool add_support(std::size_t idx) {
    if (support_.size() >= d_ + 1) return false;
    std::size_t m = support_.size();
    if (m >= 2) {
      Eigen::VectorXd q0 = point(support_[0]);
      Eigen::MatrixXd v(d_, m - 1);
      for (std::size_t i = 1; i < m; ++i) v.col(i - 1) = point(support_[i]) - q0;
      Eigen::VectorXd w = point(idx) - q0;
      Eigen::VectorXd coeff = v.colPivHouseholderQr().solve(w);
      double residual = (v * coeff - w).squaredNorm();
      if (residual <= 1e-20 * w.squaredNorm()) return false;  // affinely dependent
    }
    support_.push_back(idx);
    return true;
  }

  std::span<const double> flat_;
  std::size_t n_, d_;
  Eigen::VectorXd center_;
  double radius_sq_ = 0;
  std::vector<std::size_t> support_;
};

}  // namespace

Ball smallest_enclosing_ball(std::span<const double> flat, std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw std::invalid_argument("smallest_enclosing_ball: empty input");
  if (flat.size() != n * d) throw std::invalid_argument("smallest_enclosing_ball: size mismatch");
  if (n == 1) {
    Ball b;
    b.center.assign(flat.begin(), flat.end());
    b.radius = 0;
    b.support = {0};
    return b;
  }
  return Walker(flat, n, d).run();
}

Ball smallest_enclosing_ball(const EuclideanPointSet& points) {
  std::size_t n = points.size(), d = points.dimension();
  std::vector<double> flat;
  flat.reserve(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = points.point_double(i);
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return smallest_enclosing_ball(flat, n, d);
}

}  // namespace angleset
