#include "angleset/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "angleset/env.hpp"
#include "angleset/kernels.hpp"

namespace angleset::verify {

namespace {

// Conservative bound on |computed cos - true cos| when a, b, e carry at most
// one ulp of relative error each (they are doubles of exact values).
inline double cos_error_bound(double a, double b, double e, double denom) {
  return 4e-15 * ((a + b + e) / denom + 1.0);
}

struct TripleRef {
  double cos = 2.0;
  std::array<std::size_t, 3> arg{0, 0, 0};
  bool any = false;

  // Deterministic ordering: smaller cosine wins; ties break on (j, i, k).
  bool worse_than(double c, std::size_t i, std::size_t j, std::size_t k) const {
    if (!any) return true;
    if (c != cos) return c < cos;
    return std::array<std::size_t, 3>{j, i, k} < std::array<std::size_t, 3>{arg[1], arg[0], arg[2]};
  }
  void take(double c, std::size_t i, std::size_t j, std::size_t k) {
    cos = c;
    arg = {i, j, k};
    any = true;
  }
};

struct LocalScan {
  TripleRef worst;
  std::size_t borderline = 0;
  std::size_t undecided = 0;
  std::size_t violations = 0;
};

// Exact squared distances for the two point flavors; sq_double values are
// derived from the exact ones, so their relative error is at most one ulp.
struct LatticeTable {
  const LatticePointSet& pts;
  std::size_t n;
  std::vector<std::int64_t> sq;
  std::vector<double> sqd;

  explicit LatticeTable(const LatticePointSet& p) : pts(p), n(p.size()) {
    sq.resize(n * n);
    kernels::active_ops().squared_distance_matrix(p.flat().data(), n, p.dimension(), sq.data());
    sqd.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i) sqd[i] = static_cast<double>(sq[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sq[i * n + j] == 0)
          throw std::invalid_argument("coincident points at indices " + std::to_string(i) + "," +
                                      std::to_string(j));
  }
  double sq_double(std::size_t i, std::size_t j) const { return sqd[i * n + j]; }
  Rational sq_exact(std::size_t i, std::size_t j) const {
    return Rational(static_cast<long>(sq[i * n + j]));
  }
};

struct RationalTable {
  // The exact matrix is kept when it fits comfortably; beyond that the
  // borderline path recomputes entries on demand.
  static constexpr std::size_t kCacheLimit = 1500;

  const EuclideanPointSet& pts;
  std::size_t n;
  std::vector<double> sqd;
  std::vector<Rational> sq_cache;

  explicit RationalTable(const EuclideanPointSet& p) : pts(p), n(p.size()) {
    sqd.resize(n * n, 0.0);
    bool cache = n <= kCacheLimit;
    if (cache) sq_cache.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational s = p.squared_distance(i, j);
        if (s == 0)
          throw std::invalid_argument("coincident points at indices " + std::to_string(i) + "," +
                                      std::to_string(j));
        double v = s.get_d();
        sqd[i * n + j] = v;
        sqd[j * n + i] = v;
        if (cache) {
          sq_cache[i * n + j] = s;
          sq_cache[j * n + i] = std::move(s);
        }
      }
  }
  double sq_double(std::size_t i, std::size_t j) const { return sqd[i * n + j]; }
  Rational sq_exact(std::size_t i, std::size_t j) const {
    return sq_cache.empty() ? pts.squared_distance(i, j) : sq_cache[i * n + j];
  }
};

void check_scan_budget(std::size_t n, const VerifyOptions& options) {
  if (n < 3) throw std::invalid_argument("max_angle: need at least 3 points");
  if (n > options.max_points)
    throw std::invalid_argument("max_angle: point count exceeds the cubic-scan budget (" +
                                std::to_string(options.max_points) + ")");
}

template <class Table>
AngleCertificate scan_triples(const Table& table, const AngleThreshold& threshold, Mode mode,
                              const VerifyOptions& options) {
  const std::size_t n = table.n;
  const double cos_mid = threshold.cos_alpha();
  const double tol = options.borderline_tolerance;

  auto scan_apex = [&](std::size_t j, LocalScan& loc) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const double a = table.sq_double(i, j);
      for (std::size_t k = i + 1; k < n; ++k) {
        if (k == j) continue;
        const double b = table.sq_double(k, j);
        const double e = table.sq_double(i, k);
        const double denom = 2.0 * std::sqrt(a * b);
        const double cosd = (a + b - e) / denom;
        if (loc.worst.worse_than(cosd, i, j, k)) loc.worst.take(cosd, i, j, k);

        const double margin = cosd - cos_mid;
        const double decided_band = std::max(tol, cos_error_bound(a, b, e, denom));
        if (margin > decided_band) continue;       // certainly below the threshold angle
        if (margin < -decided_band) {              // certainly above: fails either mode
          ++loc.violations;
          continue;
        }
        ++loc.borderline;
        Rational sa = table.sq_exact(i, j), sb = table.sq_exact(k, j), se = table.sq_exact(i, k);
        Rational dot = (sa + sb - se) / 2;
        dot.canonicalize();
        switch (threshold.compare_angle(dot, sa, sb)) {
          case Cmp::Less:
            break;
          case Cmp::Equal:
            if (mode == Mode::Strict) ++loc.violations;
            break;
          case Cmp::Greater:
            ++loc.violations;
            break;
          case Cmp::Undecided:
            ++loc.undecided;
            break;
        }
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : worker_thread_count();
  if (n < 64) threads = 1;
  std::vector<LocalScan> locals(threads);
  if (threads == 1) {
    for (std::size_t j = 0; j < n; ++j) scan_apex(j, locals[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t j = t; j < n; j += threads) scan_apex(j, locals[t]);
      });
    for (auto& th : pool) th.join();
  }

  LocalScan merged;
  for (const LocalScan& loc : locals) {
    merged.borderline += loc.borderline;
    merged.undecided += loc.undecided;
    merged.violations += loc.violations;
    if (loc.worst.any &&
        merged.worst.worse_than(loc.worst.cos, loc.worst.arg[0], loc.worst.arg[1], loc.worst.arg[2]))
      merged.worst = loc.worst;
  }

  AngleCertificate cert;
  cert.n = n;
  cert.alpha_radians = threshold.alpha_radians();
  cert.mode = mode;
  cert.borderline_count = merged.borderline;
  cert.undecided_count = merged.undecided;
  cert.violation_count = merged.violations;
  cert.pass = merged.violations == 0 && merged.undecided == 0;
  cert.max_angle = std::acos(std::clamp(merged.worst.cos, -1.0, 1.0));
  cert.argmax_triple = merged.worst.arg;
  return cert;
}

template <class PointSetT>
DistanceStats stats_impl(const PointSetT& points) {
  std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("distance_stats: need at least 2 points");
  DistanceStats st;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s(points.squared_distance(i, j));
      if (s == 0)
        throw std::invalid_argument("coincident points at indices " + std::to_string(i) + "," +
                                    std::to_string(j));
      if (first || s < st.min_sq) {
        st.min_sq = s;
        st.argmin = {i, j};
      }
      if (first || s > st.max_sq) {
        st.max_sq = s;
        st.argmax = {i, j};
      }
      first = false;
    }
  Rational r2 = st.min_sq / st.max_sq;
  r2.canonicalize();
  st.ratio = std::sqrt(r2.get_d());
  return st;
}

}  // namespace

AngleCertificate max_angle(const LatticePointSet& points, const AngleThreshold& threshold,
                           Mode mode, const VerifyOptions& options) {
  check_scan_budget(points.size(), options);
  LatticeTable table(points);
  return scan_triples(table, threshold, mode, options);
}

AngleCertificate max_angle(const EuclideanPointSet& points, const AngleThreshold& threshold,
                           Mode mode, const VerifyOptions& options) {
  check_scan_budget(points.size(), options);
  RationalTable table(points);
  return scan_triples(table, threshold, mode, options);
}

DistanceStats distance_stats(const LatticePointSet& points) { return stats_impl(points); }
DistanceStats distance_stats(const EuclideanPointSet& points) { return stats_impl(points); }

RatioCheck check_min_max_ratio(const DistanceStats& stats, const Rational& c) {
  RatioCheck rc;
  Rational floor_val = 1 - Rational(3488, 1000) * c;
  floor_val.canonicalize();
  rc.floor_value = floor_val.get_d();
  rc.ratio = stats.ratio;
  rc.margin = rc.ratio - rc.floor_value;
  if (floor_val <= 0) {
    rc.pass = true;  // a positive ratio beats a non-positive floor
    return rc;
  }
  Rational lhs = stats.min_sq * floor_val.get_den() * floor_val.get_den();
  Rational rhs = stats.max_sq * floor_val.get_num() * floor_val.get_num();
  rc.pass = lhs > rhs;  // ratio^2 > floor^2, all exact
  return rc;
}

RatioCheck check_min_max_ratio(const LatticePointSet& points, const Rational& c) {
  return check_min_max_ratio(distance_stats(points), c);
}
RatioCheck check_min_max_ratio(const EuclideanPointSet& points, const Rational& c) {
  return check_min_max_ratio(distance_stats(points), c);
}

ProjectionResult project_to_sphere(const EuclideanPointSet& points, const Ball& ball) {
  const std::size_t n = points.size();
  const std::uint32_t d = points.dimension();
  if (ball.center.size() != d) throw std::invalid_argument("project_to_sphere: dimension mismatch");
  if (!(ball.radius > 0)) throw std::invalid_argument("project_to_sphere: ball radius must be positive");

  EuclideanPointSet image(d, Rational(1), points.precision_bits());
  std::vector<double> q(d);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = points.point_double(i);
    double dist_sq = 0;
    for (std::uint32_t m = 0; m < d; ++m) {
      double delta = p[m] - ball.center[m];
      dist_sq += delta * delta;
    }
    double dist = std::sqrt(dist_sq);
    if (dist <= 1e-15 * ball.radius)
      throw std::invalid_argument("project_to_sphere: point " + std::to_string(i) +
                                  " coincides with the center");
    if (dist > ball.radius * (1 + 1e-9) + 1e-12)
      throw std::invalid_argument("project_to_sphere: point " + std::to_string(i) +
                                  " lies outside the ball");
    double stretch = ball.radius / dist;
    for (std::uint32_t m = 0; m < d; ++m) q[m] = ball.center[m] + (p[m] - ball.center[m]) * stretch;
    image.add_point(std::span<const double>(q));
  }

  ProjectionResult result{std::move(image), 0, 0, false};
  Rational radius_sq = rational_from_double(ball.radius);
  radius_sq = radius_sq * radius_sq;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Rational p_sq = points.squared_distance(a, b);
      if (p_sq > radius_sq) {
        ++result.pairs_above_radius;
        if (result.points.squared_distance(a, b) > p_sq) ++result.pairs_expanded;
      }
    }
  result.expansion_holds = result.pairs_expanded == result.pairs_above_radius;
  return result;
}

}  // namespace angleset::verify
