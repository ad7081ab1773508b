#include "angleset/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace angleset::oracle {

namespace {

// Exact verdict for a single apex angle against the threshold.
bool apex_violates(const Rational& dot, const Rational& a_sq, const Rational& b_sq,
                   const AngleThreshold& threshold, Mode mode) {
  switch (threshold.compare_angle(dot, a_sq, b_sq)) {
    case Cmp::Less:
      return false;
    case Cmp::Equal:
      return mode == Mode::Strict;
    case Cmp::Greater:
      return true;
    case Cmp::Undecided:
      throw std::runtime_error("conflict_triples: angle undecidable at maximum precision");
  }
  return true;
}

template <class PointSetT>
std::vector<std::array<std::uint32_t, 3>> conflict_triples_impl(const PointSetT& points,
                                                                const AngleThreshold& threshold,
                                                                Mode mode) {
  std::size_t n = points.size();
  if (n > 64) throw std::invalid_argument("conflict_triples: more than 64 candidates");
  std::vector<Rational> sq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      sq[i * n + j] = sq[j * n + i] = Rational(points.squared_distance(i, j));
      if (sq[i * n + j] == 0)
        throw std::invalid_argument("conflict_triples: coincident candidate points");
    }

  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t i = 0; i + 2 < n; ++i)
    for (std::uint32_t j = i + 1; j + 1 < n; ++j)
      for (std::uint32_t k = j + 1; k < n; ++k) {
        bool bad = false;
        const std::array<std::array<std::uint32_t, 3>, 3> apexes = {{
            {j, i, k}, {i, j, k}, {i, k, j}  // (leg, apex, leg)
        }};
        for (const auto& [p, apex, q] : apexes) {
          const Rational& a = sq[p * n + apex];
          const Rational& b = sq[q * n + apex];
          const Rational& e = sq[p * n + q];
          Rational dot = (a + b - e) / 2;
          dot.canonicalize();
          if (apex_violates(dot, a, b, threshold, mode)) {
            bad = true;
            break;
          }
        }
        if (bad) out.push_back({i, j, k});
      }
  return out;
}

// ---- maximum independent set in the 3-uniform conflict hypergraph ----

struct TripleSystem {
  std::uint32_t n = 0;
  // For vertex v: masks of the other two vertices of each conflict triple
  // containing v.
  std::vector<std::vector<std::uint64_t>> pair_masks;
  std::vector<std::uint32_t> degree;

  TripleSystem(std::uint32_t n_, const std::vector<std::array<std::uint32_t, 3>>& triples)
      : n(n_), pair_masks(n_), degree(n_, 0) {
    for (const auto& t : triples) {
      std::uint64_t m = (std::uint64_t{1} << t[0]) | (std::uint64_t{1} << t[1]) |
                        (std::uint64_t{1} << t[2]);
      for (std::uint32_t v : t) {
        pair_masks[v].push_back(m & ~(std::uint64_t{1} << v));
        ++degree[v];
      }
    }
  }

  bool can_add(std::uint64_t chosen, std::uint32_t v) const {
    for (std::uint64_t m : pair_masks[v])
      if ((chosen & m) == m) return false;
    return true;
  }
};

// Lexicographic subset order on index sets: at the first differing index, the
// smaller set is the one containing it.
bool lex_subset_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  unsigned pos = std::countr_zero(a ^ b);
  return (a >> pos) & 1;
}

class BranchAndBound {
 public:
  BranchAndBound(const TripleSystem& sys) : sys_(sys) {
    order_.resize(sys.n);
    for (std::uint32_t i = 0; i < sys.n; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return sys.degree[a] > sys.degree[b]; });
    suffix_mask_.assign(sys.n + 1, 0);
    for (std::uint32_t depth = sys.n; depth-- > 0;)
      suffix_mask_[depth] = suffix_mask_[depth + 1] | (std::uint64_t{1} << order_[depth]);
  }

  std::uint64_t solve() {
    best_mask_ = 0;
    dfs(0, 0, 0);
    return best_mask_;
  }

  /// True when some valid superset of `chosen` using candidates >= from
  /// (in index order) reaches `target` vertices total.
  bool reachable(std::uint64_t chosen, std::uint32_t from, std::uint32_t target) {
    std::uint32_t count = static_cast<std::uint32_t>(std::popcount(chosen));
    if (count >= target) return true;
    if (count + (sys_.n - from) < target) return false;
    if (count + clique_cover_bound(chosen, candidates_from(from)) < target) return false;
    for (std::uint32_t v = from; v < sys_.n; ++v) {
      if (count + (sys_.n - v) < target) return false;
      if (sys_.can_add(chosen, v) &&
          reachable(chosen | (std::uint64_t{1} << v), v + 1, target))
        return true;
    }
    return false;
  }

 private:
  std::uint64_t candidates_from(std::uint32_t from) const {
    return from >= 64 ? 0 : (~std::uint64_t{0} << from) & mask_all();
  }
  std::uint64_t mask_all() const {
    return sys_.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sys_.n) - 1;
  }

  // Greedy clique cover of the pair-conflict graph induced by `chosen` on the
  // candidate set: u,v conflict when some accepted triple completes with a
  // chosen vertex. Each clique contributes at most one more vertex.
  std::uint32_t clique_cover_bound(std::uint64_t chosen, std::uint64_t candidates) const {
    std::uint32_t cliques = 0;
    std::vector<std::uint64_t> clique_masks;
    std::uint64_t rest = candidates;
    while (rest) {
      std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      // conflict mask of v against other candidates, given chosen
      std::uint64_t conf = 0;
      for (std::uint64_t m : sys_.pair_masks[v]) {
        std::uint64_t others = m;
        if (std::popcount(others & chosen) == 1) {
          std::uint64_t partner = others & ~chosen;
          if (std::popcount(partner) == 1) conf |= partner;
        }
      }
      bool placed = false;
      for (std::uint64_t& cm : clique_masks) {
        if ((cm & ~conf) == 0) {  // v conflicts with every member
          cm |= std::uint64_t{1} << v;
          placed = true;
          break;
        }
      }
      if (!placed) {
        clique_masks.push_back(std::uint64_t{1} << v);
        ++cliques;
      }
    }
    return cliques;
  }

  void dfs(std::uint64_t chosen, std::uint32_t depth, std::uint32_t count) {
    if (count > static_cast<std::uint32_t>(std::popcount(best_mask_))) best_mask_ = chosen;
    if (depth == sys_.n) return;
    std::uint32_t best = static_cast<std::uint32_t>(std::popcount(best_mask_));
    std::uint32_t remaining = sys_.n - depth;
    if (count + remaining <= best) return;
    if (count + clique_cover_bound(chosen, suffix_mask_[depth]) <= best) return;
    std::uint32_t v = order_[depth];
    if (sys_.can_add(chosen, v)) dfs(chosen | (std::uint64_t{1} << v), depth + 1, count + 1);
    dfs(chosen, depth + 1, count);
  }

  const TripleSystem& sys_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint64_t> suffix_mask_;
  std::uint64_t best_mask_ = 0;
};

std::uint64_t naive_max_subset(std::uint32_t n, const std::vector<std::array<std::uint32_t, 3>>& triples) {
  // valid[S] = valid[S minus lowest bit] and no conflict triple whose lowest
  // vertex is that bit lies inside S.
  std::vector<std::vector<std::uint64_t>> by_min(n);
  for (const auto& t : triples) {
    std::uint32_t lo = std::min({t[0], t[1], t[2]});
    std::uint64_t m = (std::uint64_t{1} << t[0]) | (std::uint64_t{1} << t[1]) |
                      (std::uint64_t{1} << t[2]);
    by_min[lo].push_back(m & ~(std::uint64_t{1} << lo));
  }
  std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> valid(total, false);
  valid[0] = true;
  std::uint64_t best_mask = 0;
  int best_count = 0;
  for (std::uint64_t s = 1; s < total; ++s) {
    std::uint32_t lo = static_cast<std::uint32_t>(std::countr_zero(s));
    std::uint64_t rest = s & (s - 1);
    if (!valid[rest]) continue;
    bool ok = true;
    for (std::uint64_t m : by_min[lo])
      if ((rest & m) == m) {
        ok = false;
        break;
      }
    if (!ok) continue;
    valid[s] = true;
    int count = std::popcount(s);
    if (count > best_count || (count == best_count && lex_subset_less(s, best_mask))) {
      best_count = count;
      best_mask = s;
    }
  }
  return best_mask;
}

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Lexicographically smallest maximum subset, via feasibility probes.
std::uint64_t canonicalize_witness(BranchAndBound& bnb, const TripleSystem& sys,
                                   std::uint32_t target) {
  std::uint64_t chosen = 0;
  std::uint32_t have = 0;
  for (std::uint32_t v = 0; v < sys.n && have < target; ++v) {
    if (!sys.can_add(chosen, v)) continue;
    std::uint64_t with_v = chosen | (std::uint64_t{1} << v);
    if (bnb.reachable(with_v, v + 1, target)) {
      chosen = with_v;
      ++have;
    }
  }
  if (have != target) throw std::logic_error("canonical witness reconstruction failed");
  return chosen;
}

template <class PointSetT>
MaxSubsetResult max_subset_impl(const PointSetT& candidates, const AngleThreshold& threshold,
                                Mode mode, SubsetMethod method, const MaxSubsetBudgets& budgets) {
  std::size_t n = candidates.size();
  if (n < 2) throw std::invalid_argument("brute_force_max_subset: need at least 2 candidates");
  bool want_bnb = method != SubsetMethod::Naive;
  bool want_naive = method != SubsetMethod::BranchAndBound;
  if (want_bnb && n > budgets.bnb_max)
    throw std::invalid_argument("brute_force_max_subset: candidate count exceeds bnb budget");
  if (want_naive && n > budgets.naive_max)
    throw std::invalid_argument("brute_force_max_subset: candidate count exceeds naive budget");

  auto triples = conflict_triples_impl(candidates, threshold, mode);
  TripleSystem sys(static_cast<std::uint32_t>(n), triples);

  MaxSubsetResult result;
  result.conflict_triple_count = triples.size();

  std::uint64_t bnb_mask = 0, naive_mask = 0;
  BranchAndBound bnb(sys);
  if (want_bnb) bnb_mask = bnb.solve();
  if (want_naive) naive_mask = naive_max_subset(static_cast<std::uint32_t>(n), triples);

  std::uint64_t winner = want_bnb ? bnb_mask : naive_mask;
  if (method == SubsetMethod::Both) {
    result.methods_agree = std::popcount(bnb_mask) == std::popcount(naive_mask);
    if (!result.methods_agree)
      throw std::logic_error("brute_force_max_subset: bnb and naive disagree");
  }

  std::uint32_t best = static_cast<std::uint32_t>(std::popcount(winner));
  std::uint64_t canonical = want_bnb ? canonicalize_witness(bnb, sys, best) : winner;
  result.size = best;
  result.subset = mask_to_indices(canonical);
  return result;
}

}  // namespace

EuclideanPointSet regular_simplex(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("regular_simplex: d must be positive");
  EuclideanPointSet points(d + 1, Rational(1, 2));
  std::vector<Rational> row(d + 1, Rational(0));
  for (std::uint32_t i = 0; i <= d; ++i) {
    row[i] = 1;
    points.add_point(std::span<const Rational>(row));
    row[i] = 0;
  }
  return points;
}

EuclideanPointSet regular_simplex_intrinsic(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("regular_simplex_intrinsic: d must be positive");
  // Householder reflection taking the all-ones direction to the last axis;
  // afterwards every vertex shares the same last coordinate, which is dropped.
  std::size_t m = d + 1;
  double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<double> w(m, inv_sqrt_m);
  w[m - 1] -= 1.0;
  double w_norm_sq = 0;
  for (double x : w) w_norm_sq += x * x;

  EuclideanPointSet points(d);
  double scale = 1.0 / std::sqrt(2.0);
  std::vector<double> image(d);
  for (std::size_t i = 0; i < m; ++i) {
    // p = scale * e_i; H p = p - 2 <p, w> / |w|^2 * w
    double dot = scale * w[i];
    double coeff = w_norm_sq > 0 ? 2.0 * dot / w_norm_sq : 0.0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j)
      image[j] = (i == j ? scale : 0.0) - coeff * w[j];
    points.add_point(std::span<const double>(image));
  }
  return points;
}

RankReport equidistant_rank_check(const EuclideanPointSet& points, std::size_t base_index,
                                  double tolerance) {
  std::size_t n = points.size();
  if (base_index >= n) throw std::invalid_argument("equidistant_rank_check: base index out of range");
  if (n < 2) throw std::invalid_argument("equidistant_rank_check: need at least 2 points");

  RankReport report;
  report.family_size = n - 1;
  std::vector<std::size_t> family;
  for (std::size_t i = 0; i < n; ++i)
    if (i != base_index) family.push_back(i);

  Rational tol = rational_from_double(tolerance);
  std::size_t m = family.size();
  Eigen::MatrixXd gram(m, m);
  report.precondition_ok = true;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = r; s < m; ++s) {
      Rational g = points.centered_dot(base_index, family[r], family[s]);
      Rational target = (r == s) ? Rational(1) : Rational(1, 2);
      Rational gap = g - target;
      if (abs(gap) > tol && report.precondition_ok) {
        report.precondition_ok = false;
        report.diagnostic = "pair (" + std::to_string(family[r]) + "," + std::to_string(family[s]) +
                            "): expected " + format_fraction(target) + ", got " + format_fraction(g);
      }
      gram(r, s) = gram(s, r) = g.get_d();
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  report.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + m);
  double largest = report.eigenvalues.empty() ? 0.0 : report.eigenvalues.back();
  double cut = 1e-8 * std::max(largest, 0.0);
  report.rank = 0;
  for (double ev : report.eigenvalues)
    if (ev > cut) ++report.rank;
  report.certifies_dimension_bound = report.precondition_ok && report.rank == m;
  return report;
}

std::vector<std::array<std::uint32_t, 3>> conflict_triples(const LatticePointSet& points,
                                                           const AngleThreshold& threshold,
                                                           Mode mode) {
  return conflict_triples_impl(points, threshold, mode);
}
std::vector<std::array<std::uint32_t, 3>> conflict_triples(const EuclideanPointSet& points,
                                                           const AngleThreshold& threshold,
                                                           Mode mode) {
  return conflict_triples_impl(points, threshold, mode);
}

MaxSubsetResult brute_force_max_subset(const LatticePointSet& candidates,
                                       const AngleThreshold& threshold, Mode mode,
                                       SubsetMethod method, const MaxSubsetBudgets& budgets) {
  return max_subset_impl(candidates, threshold, mode, method, budgets);
}
MaxSubsetResult brute_force_max_subset(const EuclideanPointSet& candidates,
                                       const AngleThreshold& threshold, Mode mode,
                                       SubsetMethod method, const MaxSubsetBudgets& budgets) {
  return max_subset_impl(candidates, threshold, mode, method, budgets);
}

bool isosceles_lemma_trial(double leg, double apex_angle, double u, double v, double& ab_out,
                           double& mn_out) {
  double half = apex_angle / 2;
  double ax = leg * std::cos(-half), ay = leg * std::sin(-half);
  double bx = leg * std::cos(half), by = leg * std::sin(half);
  ab_out = std::hypot(ax - bx, ay - by);
  double mx = u * ax, my = u * ay;
  double nx = v * bx, ny = v * by;
  mn_out = std::hypot(mx - nx, my - ny);
  return mn_out > leg;  // |MN| > |AC| hypothesis
}

LemmaCheckResult isosceles_lemma_check(std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("isosceles_lemma_check: trials must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> leg_dist(0.2, 5.0);
  std::uniform_real_distribution<double> angle_dist(0.05, 3.10);  // inside (0, pi)
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  LemmaCheckResult result;
  result.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    double leg = leg_dist(rng);
    double apex = angle_dist(rng);
    double u = unit(rng), v = unit(rng);
    if (u <= 0 || u >= 1 || v <= 0 || v >= 1) continue;  // strict interiority
    double ab = 0, mn = 0;
    if (!isosceles_lemma_trial(leg, apex, u, v, ab, mn)) continue;
    ++result.valid_samples;
    if (!(ab > mn)) {
      ++result.counterexamples;
      if (!result.first_counterexample)
        result.first_counterexample = LemmaCounterexample{leg, apex, u, v, ab, mn};
    }
  }
  return result;
}

}  // namespace angleset::oracle
