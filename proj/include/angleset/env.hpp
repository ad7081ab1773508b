#pragma once

namespace angleset {

/// Default working precision in bits for real-valued evaluations. 128 unless
/// ANGLESET_PRECISION_BITS requests more (values are clamped to [64, 4096]).
unsigned default_precision_bits();

/// Worker-thread count for parallel scans: min(hardware, ANGLESET_THREADS).
unsigned worker_thread_count();

}  // namespace angleset
