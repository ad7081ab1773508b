#include <bit>

#include "angleset/kernels.hpp"

namespace angleset::kernels {

namespace {

std::size_t find_blocking_edge_scalar(const std::uint64_t* candidate, const std::uint64_t* edges,
                                      std::size_t words, std::size_t n_edges, std::uint32_t cutoff) {
  for (std::size_t j = 0; j < n_edges; ++j) {
    const std::uint64_t* row = edges + j * words;
    std::uint32_t count = 0;
    for (std::size_t w = 0; w < words; ++w)
      count += static_cast<std::uint32_t>(std::popcount(candidate[w] & row[w]));
    if (count >= cutoff) return j;
  }
  return npos;
}

std::uint32_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint32_t count = 0;
  for (std::size_t w = 0; w < words; ++w)
    count += static_cast<std::uint32_t>(std::popcount(a[w] & b[w]));
  return count;
}

void squared_distance_matrix_scalar(const std::int32_t* points, std::size_t n, std::size_t d,
                                    std::int64_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = 0;
    const std::int32_t* pi = points + i * d;
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int32_t* pj = points + j * d;
      std::int64_t sum = 0;
      for (std::size_t m = 0; m < d; ++m) {
        std::int64_t diff = static_cast<std::int64_t>(pi[m]) - pj[m];
        sum += diff * diff;
      }
      out[i * n + j] = sum;
      out[j * n + i] = sum;
    }
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", &find_blocking_edge_scalar, &and_popcount_scalar,
                       &squared_distance_matrix_scalar};
  return ops;
}

}  // namespace angleset::kernels
