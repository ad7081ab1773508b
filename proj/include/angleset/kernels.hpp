#pragma once

#include <cstddef>
#include <cstdint>

namespace angleset::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Data-parallel inner loops with scalar reference implementations and SIMD
/// variants selected at runtime. Every variant must be bit-for-bit equivalent
/// to the scalar reference; tests/test_kernels.cpp enforces that on random
/// inputs.
struct Ops {
  const char* name;

  /// First row index j < n_edges with popcount(candidate AND edges[j*words..])
  /// >= cutoff, or npos. `edges` is a row-major bit matrix, `words` u64 per row.
  std::size_t (*find_blocking_edge)(const std::uint64_t* candidate, const std::uint64_t* edges,
                                    std::size_t words, std::size_t n_edges, std::uint32_t cutoff);

  /// Popcount of (a AND b) over `words` u64.
  std::uint32_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

  /// All-pairs squared Euclidean distances of n points in Z^d (row-major
  /// int32, |coord| <= 2^20). Writes the full symmetric n*n int64 matrix.
  void (*squared_distance_matrix)(const std::int32_t* points, std::size_t n, std::size_t d,
                                  std::int64_t* out);
};

const Ops& scalar_ops();

/// True when this build carries the AVX2 variant and the CPU reports AVX2.
bool avx2_available();

/// The AVX2 variant. Only valid to call when avx2_available().
const Ops& avx2_ops();

/// Best available variant; honors ANGLESET_SIMD=scalar|avx2 when set.
/// Throws std::runtime_error if the override names an unavailable variant.
const Ops& active_ops();

}  // namespace angleset::kernels
