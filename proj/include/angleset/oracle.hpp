#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "angleset/points.hpp"
#include "angleset/threshold.hpp"

namespace angleset::oracle {

/// The d+1 vertices (0,...,1/√2,...,0) in R^{d+1}, represented exactly as
/// unit rows with squared scale 1/2. All pairwise distances are exactly 1 and
/// all angles are exactly π/3.
EuclideanPointSet regular_simplex(std::uint32_t d);

/// Isometric copy of regular_simplex(d) inside R^d (the ambient hyperplane
/// rotated onto a coordinate hyperplane). Double-precision coordinates.
EuclideanPointSet regular_simplex_intrinsic(std::uint32_t d);

/// Gram-matrix rank certificate for a claimed unit-equidistant family: checks
/// Gram({a_i - a_base}) = (I+J)/2 within tolerance and reports the rank via
/// eigenvalue thresholding (cut at 1e-8 of the largest eigenvalue). A full
/// rank n certifies that n points beyond the base need n dimensions.
struct RankReport {
  bool precondition_ok = false;
  std::string diagnostic;  // offending pair when the precondition fails
  std::size_t family_size = 0;
  std::uint32_t rank = 0;
  bool certifies_dimension_bound = false;  // rank == family_size
  std::vector<double> eigenvalues;
};
RankReport equidistant_rank_check(const EuclideanPointSet& points, std::size_t base_index,
                                  double tolerance = 1e-9);

/// Triples {i<j<k} containing at least one apex angle that violates the
/// threshold in the given mode. Decided by the exact predicate; throws on an
/// undecidable comparison.
std::vector<std::array<std::uint32_t, 3>> conflict_triples(const LatticePointSet& points,
                                                           const AngleThreshold& threshold,
                                                           Mode mode);
std::vector<std::array<std::uint32_t, 3>> conflict_triples(const EuclideanPointSet& points,
                                                           const AngleThreshold& threshold,
                                                           Mode mode);

enum class SubsetMethod { BranchAndBound, Naive, Both };

struct MaxSubsetBudgets {
  std::size_t bnb_max = 64;
  std::size_t naive_max = 22;
};

struct MaxSubsetResult {
  std::size_t size = 0;
  std::vector<std::size_t> subset;  // lexicographically smallest maximum subset
  std::size_t conflict_triple_count = 0;
  bool methods_agree = true;  // set by Both
};

/// Maximum-cardinality subset whose every angle satisfies the threshold:
/// maximum independent set in the 3-uniform conflict hypergraph. The
/// branch-and-bound orders vertices by conflict degree and prunes with a
/// greedy clique cover; the naive method sweeps all 2^n subsets.
MaxSubsetResult brute_force_max_subset(const LatticePointSet& candidates,
                                       const AngleThreshold& threshold, Mode mode,
                                       SubsetMethod method, const MaxSubsetBudgets& budgets = {});
MaxSubsetResult brute_force_max_subset(const EuclideanPointSet& candidates,
                                       const AngleThreshold& threshold, Mode mode,
                                       SubsetMethod method, const MaxSubsetBudgets& budgets = {});

/// One sample of the isosceles-triangle expansion property: legs |CA|=|CB| of
/// the given length with the given apex angle at C, M = u·(A-C), N = v·(B-C)
/// with u, v in (0,1). Returns true when the sample satisfies the |MN| > |AC|
/// hypothesis (only those samples assert anything).
bool isosceles_lemma_trial(double leg, double apex_angle, double u, double v, double& ab_out,
                           double& mn_out);

struct LemmaCounterexample {
  double leg = 0, apex_angle = 0, u = 0, v = 0;
  double ab = 0, mn = 0;
};

struct LemmaCheckResult {
  std::size_t trials = 0;
  std::size_t valid_samples = 0;  // samples passing the |MN| > |AC| filter
  std::size_t counterexamples = 0;
  std::optional<LemmaCounterexample> first_counterexample;
};

/// Randomized sweep of the expansion property: samples random isosceles
/// triangles and interior points, keeps samples with |MN| > |AC| and asserts
/// |AB| > |MN|.
LemmaCheckResult isosceles_lemma_check(std::size_t trials, std::uint64_t seed);

}  // namespace angleset::oracle
