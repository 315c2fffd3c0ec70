#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rotnd/tensor_core.hpp"

namespace rotnd {

/// One reversal as it was executed, with the swaps actually performed.
struct ReversalRecord {
  Region region;
  std::uint64_t swaps = 0;
};

/// Counters filled in by kernels when the caller passes a non-null pointer.
/// Passing nullptr skips all bookkeeping (and its allocations).
struct Instrumentation {
  std::uint64_t reversals = 0;
  std::uint64_t swaps = 0;
  std::vector<ReversalRecord> log;

  // Filled by the parallel executor only.
  std::size_t workers = 0;
  std::uint64_t stage1_pairs = 0;
  std::uint64_t stage2_pairs = 0;
  // Bytes of index state held by one worker (O(n), independent of N).
  std::size_t worker_state_bytes = 0;

  void record(const Region& region, std::uint64_t swapped) {
    ++reversals;
    swaps += swapped;
    log.push_back({region, swapped});
  }
};

}  // namespace rotnd
