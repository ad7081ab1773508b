#include <cstdlib>
#include <stdexcept>
#include <string>

#include "angleset/kernels.hpp"

namespace angleset::kernels {

bool avx2_available() {
#if defined(ANGLESET_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

#if !defined(ANGLESET_HAVE_AVX2)
const Ops& avx2_ops() { throw std::runtime_error("this build has no AVX2 kernels"); }
#endif

namespace {

const Ops& select() {
  const char* override = std::getenv("ANGLESET_SIMD");
  if (override != nullptr && *override != '\0') {
    std::string want(override);
    if (want == "scalar") return scalar_ops();
    if (want == "avx2") {
      if (!avx2_available()) throw std::runtime_error("ANGLESET_SIMD=avx2 but AVX2 is unavailable");
      return avx2_ops();
    }
    throw std::runtime_error("unknown ANGLESET_SIMD value: " + want);
  }
  if (avx2_available()) return avx2_ops();
  return scalar_ops();
}

}  // namespace

const Ops& active_ops() {
  static const Ops& chosen = select();
  return chosen;
}

}  // namespace angleset::kernels
