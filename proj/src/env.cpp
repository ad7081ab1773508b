#include "angleset/env.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace angleset {

namespace {

unsigned env_unsigned(const char* name, unsigned fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long value = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') return fallback;
  return static_cast<unsigned>(value);
}

}  // namespace

unsigned default_precision_bits() {
  static const unsigned bits = std::clamp(env_unsigned("ANGLESET_PRECISION_BITS", 128u), 64u, 4096u);
  return bits;
}

unsigned worker_thread_count() {
  static const unsigned count = [] {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned cap = env_unsigned("ANGLESET_THREADS", hw);
    return std::max(1u, std::min(hw, cap));
  }();
  return count;
}

}  // namespace angleset
