#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "angleset/rational.hpp"

namespace angleset {

/// A k-element subset of {1..d} stored as a packed bit vector.
/// Immutable after construction; word layout is little-endian (element m
/// lives in word (m-1)/64, bit (m-1)%64).
class KSubset {
 public:
  KSubset(std::uint32_t d, std::span<const std::uint32_t> elements_1based);
  static KSubset from_words(std::uint32_t d, std::vector<std::uint64_t> words);

  std::uint32_t dimension() const { return d_; }
  std::uint32_t size() const { return k_; }
  bool contains(std::uint32_t element_1based) const;
  std::vector<std::uint32_t> elements() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// 0/1 vector of length d; coordinate m-1 is 1 iff m is an element.
  std::vector<std::int32_t> characteristic_vector() const;

  friend bool operator==(const KSubset& a, const KSubset& b) = default;

 private:
  KSubset() = default;
  std::uint32_t d_ = 0;
  std::uint32_t k_ = 0;
  std::vector<std::uint64_t> words_;
};

/// |A ∩ B| via word-wise AND + popcount. Throws on dimension mismatch.
std::uint32_t intersection_size(const KSubset& a, const KSubset& b);

inline std::size_t words_for_dimension(std::uint32_t d) { return (static_cast<std::size_t>(d) + 63) / 64; }

/// Parameters of the bounded-intersection construction. The cutoff ⌈ck⌉ is
/// computed from the exact rational c, so integer ck never misclassifies.
struct ConstructionParams {
  std::uint32_t d = 0;
  std::uint32_t k = 0;
  Rational c;
  std::uint32_t intersection_cutoff = 0;  // ⌈ck⌉; accepted pairs intersect in at most cutoff-1 elements

  static ConstructionParams make(std::uint32_t d, std::uint32_t k, const Rational& c);
};

/// Edge list with the pairwise-intersection guarantee. Edge order is the
/// acceptance order of the greedy run that produced it.
class BoundedIntersectionHypergraph {
 public:
  BoundedIntersectionHypergraph(ConstructionParams params, std::vector<KSubset> edges, bool full_enumeration);

  const ConstructionParams& params() const { return params_; }
  const std::vector<KSubset>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// True when the producing run scanned every candidate; the size guarantee
  /// is only certified in that case.
  bool full_enumeration() const { return full_enumeration_; }

  /// Naive O(|E|^2) recheck of the pairwise-intersection invariant and of
  /// edge uniformity/distinctness. Used by tests as an independent oracle.
  bool recheck_invariants() const;

 private:
  ConstructionParams params_;
  std::vector<KSubset> edges_;
  bool full_enumeration_;
};

}  // namespace angleset
