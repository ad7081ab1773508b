// AVX2 variants of the kernel ops. This translation unit is the only one
// compiled with -mavx2; callers reach it through the runtime dispatch in
// kernels_dispatch.cpp after a cpuid check.

#include "angleset/kernels.hpp"

#if defined(ANGLESET_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace angleset::kernels {

namespace {

// Per-64-bit-lane popcount of a 256-bit vector (nibble-LUT + psadbw).
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i cnt8 = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt8, _mm256_setzero_si256());
}

std::size_t find_blocking_edge_avx2(const std::uint64_t* candidate, const std::uint64_t* edges,
                                    std::size_t words, std::size_t n_edges, std::uint32_t cutoff) {
  if (words == 1) {
    // Four single-word edges per iteration.
    const __m256i cand = _mm256_set1_epi64x(static_cast<long long>(candidate[0]));
    const __m256i limit = _mm256_set1_epi64x(static_cast<long long>(cutoff) - 1);
    std::size_t j = 0;
    for (; j + 4 <= n_edges; j += 4) {
      __m256i rows = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges + j));
      __m256i counts = popcount_epi64(_mm256_and_si256(rows, cand));
      __m256i hit = _mm256_cmpgt_epi64(counts, limit);
      int mask = _mm256_movemask_pd(_mm256_castsi256_pd(hit));
      if (mask != 0) return j + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask)));
    }
    for (; j < n_edges; ++j) {
      if (static_cast<std::uint32_t>(std::popcount(candidate[0] & edges[j])) >= cutoff) return j;
    }
    return npos;
  }

  for (std::size_t j = 0; j < n_edges; ++j) {
    const std::uint64_t* row = edges + j * words;
    __m256i acc = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
      __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(candidate + w));
      __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w));
      acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(c, r)));
    }
    std::uint64_t count = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                          static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                          static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                          static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
    for (; w < words; ++w) count += static_cast<std::uint64_t>(std::popcount(candidate[w] & row[w]));
    if (count >= cutoff) return j;
  }
  return npos;
}

std::uint32_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(va, vb)));
  }
  std::uint64_t count = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
  for (; w < words; ++w) count += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
  return static_cast<std::uint32_t>(count);
}

// Sum of squared differences over one coordinate row pair.
inline std::int64_t row_sqdist_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t d) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t m = 0;
  for (; m + 8 <= d; m += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + m));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + m));
    __m256i diff = _mm256_sub_epi32(va, vb);
    // Widen to i64 and square; mul_epi32 multiplies the low 32 bits of each
    // 64-bit lane as signed, which after cvtepi32_epi64 is the full value.
    __m256i lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(diff));
    __m256i hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(diff, 1));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(lo, lo));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(hi, hi));
  }
  std::int64_t sum = _mm256_extract_epi64(acc, 0) + _mm256_extract_epi64(acc, 1) +
                     _mm256_extract_epi64(acc, 2) + _mm256_extract_epi64(acc, 3);
  for (; m < d; ++m) {
    std::int64_t diff = static_cast<std::int64_t>(a[m]) - b[m];
    sum += diff * diff;
  }
  return sum;
}

void squared_distance_matrix_avx2(const std::int32_t* points, std::size_t n, std::size_t d,
                                  std::int64_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = 0;
    const std::int32_t* pi = points + i * d;
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int64_t sum = row_sqdist_avx2(pi, points + j * d, d);
      out[i * n + j] = sum;
      out[j * n + i] = sum;
    }
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{"avx2", &find_blocking_edge_avx2, &and_popcount_avx2,
                       &squared_distance_matrix_avx2};
  return ops;
}

}  // namespace angleset::kernels

#endif  // ANGLESET_HAVE_AVX2
