#include "angleset/subset.hpp"

#include <bit>
#include <stdexcept>

namespace angleset {

KSubset::KSubset(std::uint32_t d, std::span<const std::uint32_t> elements_1based) : d_(d) {
  if (d == 0) throw std::invalid_argument("KSubset: dimension must be positive");
  words_.assign(words_for_dimension(d), 0);
  for (std::uint32_t m : elements_1based) {
    if (m < 1 || m > d) throw std::invalid_argument("KSubset: element out of range 1..d");
    std::uint64_t& w = words_[(m - 1) / 64];
    std::uint64_t bit = std::uint64_t{1} << ((m - 1) % 64);
    if (w & bit) throw std::invalid_argument("KSubset: repeated element");
    w |= bit;
  }
  k_ = static_cast<std::uint32_t>(elements_1based.size());
  if (k_ == 0 || k_ > d) throw std::invalid_argument("KSubset: size must be in 1..d");
}

KSubset KSubset::from_words(std::uint32_t d, std::vector<std::uint64_t> words) {
  if (d == 0) throw std::invalid_argument("KSubset: dimension must be positive");
  if (words.size() != words_for_dimension(d)) throw std::invalid_argument("KSubset: word count mismatch");
  // No bits above position d.
  std::uint32_t tail = d % 64;
  if (tail != 0 && (words.back() >> tail) != 0) throw std::invalid_argument("KSubset: bit beyond dimension");
  std::uint32_t k = 0;
  for (std::uint64_t w : words) k += static_cast<std::uint32_t>(std::popcount(w));
  if (k == 0) throw std::invalid_argument("KSubset: empty subset");
  KSubset s;
  s.d_ = d;
  s.k_ = k;
  s.words_ = std::move(words);
  return s;
}

bool KSubset::contains(std::uint32_t element_1based) const {
  if (element_1based < 1 || element_1based > d_) return false;
  return (words_[(element_1based - 1) / 64] >> ((element_1based - 1) % 64)) & 1;
}

std::vector<std::uint32_t> KSubset::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(k_);
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      out.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w) + 1));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<std::int32_t> KSubset::characteristic_vector() const {
  std::vector<std::int32_t> v(d_, 0);
  for (std::uint32_t m : elements()) v[m - 1] = 1;
  return v;
}

std::uint32_t intersection_size(const KSubset& a, const KSubset& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("intersection_size: dimension mismatch");
  std::uint32_t count = 0;
  auto wa = a.words(), wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    count += static_cast<std::uint32_t>(std::popcount(wa[i] & wb[i]));
  return count;
}

ConstructionParams ConstructionParams::make(std::uint32_t d, std::uint32_t k, const Rational& c) {
  if (d == 0 || k == 0 || k > d) throw std::invalid_argument("ConstructionParams: need 1 <= k <= d");
  if (c <= 0 || c >= 1) throw std::invalid_argument("ConstructionParams: need 0 < c < 1");
  ConstructionParams p;
  p.d = d;
  p.k = k;
  p.c = c;
  std::int64_t cutoff = ceil_to_int64(Rational(c * k));
  if (cutoff < 1) cutoff = 1;  // unreachable for c > 0, kept as a guard
  p.intersection_cutoff = static_cast<std::uint32_t>(cutoff);
  return p;
}

BoundedIntersectionHypergraph::BoundedIntersectionHypergraph(ConstructionParams params,
                                                             std::vector<KSubset> edges,
                                                             bool full_enumeration)
    : params_(std::move(params)), edges_(std::move(edges)), full_enumeration_(full_enumeration) {}

bool BoundedIntersectionHypergraph::recheck_invariants() const {
  for (const KSubset& e : edges_) {
    if (e.dimension() != params_.d || e.size() != params_.k) return false;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (edges_[i] == edges_[j]) return false;
      if (intersection_size(edges_[i], edges_[j]) >= params_.intersection_cutoff) return false;
    }
  }
  return true;
}

}  // namespace angleset
