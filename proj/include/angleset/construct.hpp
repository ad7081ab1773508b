#pragma once

#include <cstdint>
#include <optional>

#include "angleset/bounds.hpp"
#include "angleset/points.hpp"
#include "angleset/subset.hpp"

namespace angleset::construct {

enum class EnumerationOrder { Colex, SeededRandom };

struct GreedyOptions {
  EnumerationOrder order = EnumerationOrder::Colex;
  std::uint64_t seed = 0;
  std::uint64_t candidate_budget = 20'000'000;
};

/// Number of k-subsets of [d]. Exact.
BigInt candidate_count(std::uint32_t d, std::uint32_t k);

/// Scans k-subsets of [d] in the requested order and accepts every candidate
/// whose intersection with each previously accepted edge stays below the
/// cutoff. When the scan covers all C(d,k) candidates the result is maximal
/// and its size is at least ⌈guaranteed_edges(d,k,c)⌉; a budget-truncated scan
/// is returned with full_enumeration() == false and certifies nothing.
BoundedIntersectionHypergraph greedy_hypergraph(const ConstructionParams& params,
                                                const GreedyOptions& options = {});

/// Characteristic vectors of the edges, order preserved. Every point is 0/1
/// with exactly k ones.
LatticePointSet embed_hypercube(const BoundedIntersectionHypergraph& hypergraph);

struct ConstructionResult {
  BoundedIntersectionHypergraph hypergraph;
  LatticePointSet points;
  bounds::BoundReport report;
};

/// The full pipeline: pick k (unless forced), run the greedy scan, embed into
/// the hypercube, and evaluate the bound report for the same parameters.
ConstructionResult construct_point_set(std::uint32_t d, const Rational& c,
                                       std::optional<std::uint32_t> forced_k = {},
                                       const GreedyOptions& options = {},
                                       const Rational& delta = Rational(0),
                                       unsigned prec_bits = 0);

}  // namespace angleset::construct
