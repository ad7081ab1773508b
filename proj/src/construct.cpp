#include "angleset/construct.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "angleset/kernels.hpp"

namespace angleset::construct {

namespace {

// Ascending 1-based element array -> packed words.
void fill_words(std::span<const std::uint32_t> elements, std::span<std::uint64_t> words) {
  std::fill(words.begin(), words.end(), 0);
  for (std::uint32_t m : elements) words[(m - 1) / 64] |= std::uint64_t{1} << ((m - 1) % 64);
}

// Colexicographic successor of an ascending k-subset of {1..d}; returns false
// after the last subset {d-k+1..d}.
bool next_colex(std::vector<std::uint32_t>& c, std::uint32_t d) {
  std::uint32_t k = static_cast<std::uint32_t>(c.size());
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t ceiling = (i + 1 < k) ? c[i + 1] : d + 1;
    if (c[i] + 1 < ceiling) {
      ++c[i];
      for (std::uint32_t j = 0; j < i; ++j) c[j] = j + 1;
      return true;
    }
  }
  return false;
}

// Saturating Pascal table binom[v][i] for v <= d, i <= k (colex unranking).
std::vector<std::uint64_t> pascal_table(std::uint32_t d, std::uint32_t k) {
  constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 2;
  std::vector<std::uint64_t> t(static_cast<std::size_t>(d + 1) * (k + 1), 0);
  auto at = [&](std::uint32_t v, std::uint32_t i) -> std::uint64_t& { return t[static_cast<std::size_t>(v) * (k + 1) + i]; };
  for (std::uint32_t v = 0; v <= d; ++v) {
    at(v, 0) = 1;
    for (std::uint32_t i = 1; i <= k && i <= v; ++i) {
      std::uint64_t a = at(v - 1, i), b = at(v - 1, i - 1);
      at(v, i) = (a > cap - b) ? cap : a + b;
    }
  }
  return t;
}

// Subset of colex rank r: elements c_k > ... > c_1 with r = sum C(c_i - 1, i).
void colex_unrank(std::uint64_t r, std::uint32_t d, std::uint32_t k,
                  const std::vector<std::uint64_t>& pascal, std::vector<std::uint32_t>& out) {
  auto at = [&](std::uint32_t v, std::uint32_t i) { return pascal[static_cast<std::size_t>(v) * (k + 1) + i]; };
  out.resize(k);
  std::uint32_t v = d;
  for (std::uint32_t i = k; i >= 1; --i) {  // fills descending positions, ascending result
    while (at(v - 1, i) > r) --v;
    out[i - 1] = v;
    r -= at(v - 1, i);
    --v;
  }
}

}  // namespace

BigInt candidate_count(std::uint32_t d, std::uint32_t k) { return bounds::binomial(d, k); }

BoundedIntersectionHypergraph greedy_hypergraph(const ConstructionParams& params,
                                                const GreedyOptions& options) {
  const std::uint32_t d = params.d, k = params.k;
  const std::size_t words = words_for_dimension(d);
  const auto& ops = kernels::active_ops();

  BigInt total = candidate_count(d, k);
  const bool full = total <= BigInt(static_cast<unsigned long>(options.candidate_budget));
  std::uint64_t scan_count = full ? total.get_ui() : options.candidate_budget;

  std::vector<std::uint64_t> accepted_words;
  std::vector<KSubset> edges;
  std::vector<std::uint64_t> cand(words);

  auto try_accept = [&](std::span<const std::uint32_t> elements) {
    fill_words(elements, cand);
    std::size_t blocker = ops.find_blocking_edge(cand.data(), accepted_words.data(), words,
                                                 edges.size(), params.intersection_cutoff);
    if (blocker == kernels::npos) {
      accepted_words.insert(accepted_words.end(), cand.begin(), cand.end());
      edges.emplace_back(KSubset(d, elements));
    }
  };

  if (options.order == EnumerationOrder::Colex) {
    std::vector<std::uint32_t> current(k);
    for (std::uint32_t i = 0; i < k; ++i) current[i] = i + 1;
    std::uint64_t seen = 0;
    while (seen < scan_count) {
      try_accept(current);
      ++seen;
      if (!next_colex(current, d)) break;
    }
  } else {
    if (!full)
      throw std::invalid_argument(
          "greedy_hypergraph: seeded random order requires C(d,k) within the candidate budget");
    if (scan_count > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("greedy_hypergraph: random order supports at most 2^32 candidates");
    std::vector<std::uint32_t> ranks(scan_count);
    for (std::uint64_t r = 0; r < scan_count; ++r) ranks[r] = static_cast<std::uint32_t>(r);
    std::mt19937_64 rng(options.seed);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    auto pascal = pascal_table(d, k);
    std::vector<std::uint32_t> elements;
    for (std::uint32_t r : ranks) {
      colex_unrank(r, d, k, pascal, elements);
      try_accept(elements);
    }
  }

  return BoundedIntersectionHypergraph(params, std::move(edges), full);
}

LatticePointSet embed_hypercube(const BoundedIntersectionHypergraph& hypergraph) {
  LatticePointSet points(hypergraph.params().d);
  for (const KSubset& edge : hypergraph.edges()) {
    auto v = edge.characteristic_vector();
    points.add_point(std::span<const std::int32_t>(v));
  }
  return points;
}

ConstructionResult construct_point_set(std::uint32_t d, const Rational& c,
                                       std::optional<std::uint32_t> forced_k,
                                       const GreedyOptions& options, const Rational& delta,
                                       unsigned prec_bits) {
  std::uint32_t k = forced_k.has_value() ? *forced_k : bounds::choose_k(d, c);
  ConstructionParams params = ConstructionParams::make(d, k, c);
  BoundedIntersectionHypergraph hypergraph = greedy_hypergraph(params, options);
  LatticePointSet points = embed_hypercube(hypergraph);
  bounds::BoundReport report = bounds::make_bound_report(d, c, k, delta, prec_bits);
  return ConstructionResult{std::move(hypergraph), std::move(points), std::move(report)};
}

}  // namespace angleset::construct
