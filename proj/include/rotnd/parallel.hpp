#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rotnd/detail/swap_kernel.hpp"
#include "rotnd/instrumentation.hpp"
#include "rotnd/rotation.hpp"
#include "rotnd/tensor_core.hpp"

namespace rotnd {

/// A contiguous slice [start_pair, end_pair) of one region's swap-pair sequence.
struct PairRange {
  std::size_t start_pair = 0;
  std::size_t end_pair = 0;
  Region region;

  std::size_t size() const noexcept { return end_pair - start_pair; }
};

/// [first, last) of part `part` when `total` items are split into `parts`
/// contiguous pieces whose sizes differ by at most one (larger pieces first).
struct Slice {
  std::size_t first = 0;
  std::size_t last = 0;
};
Slice even_slice(std::size_t total, std::size_t parts, std::size_t part) noexcept;

/// Splits [0, floor(|R|/2)) into at most min(workers, floor(|R|/2)) non-empty
/// contiguous ranges. Returns no ranges when the region has no pairs.
std::vector<PairRange> partition_pairs(const Region& region, std::size_t workers);

/// Hardware parallelism reported by the OpenMP runtime (at least 1).
std::size_t default_workers() noexcept;

/// Worker count actually used for a tensor of `elements`: capped at
/// floor(N/2), never below 1.
std::size_t effective_workers(std::size_t requested, std::size_t elements) noexcept;

void require_workers(std::size_t workers);

/// Bytes of index state one worker holds while swapping (index, strides and
/// the current block bounds).
inline std::size_t worker_state_bytes(std::size_t rank) noexcept {
  return 4 * rank * sizeof(std::size_t);
}

/// reverse_region with the pair sequence split across `workers` OpenMP threads.
/// Swap pairs are disjoint, so the result is bitwise equal to the serial one.
template <class T>
void reverse_region_parallel(TensorBuffer<T>& buffer, const Region& region, std::size_t workers,
                             Instrumentation* stats = nullptr) {
  require_workers(workers);
  require_region_in(region, buffer.shape());
  const std::vector<PairRange> ranges = partition_pairs(region, workers);
  const auto count = static_cast<std::ptrdiff_t>(ranges.size());
  std::uint64_t swapped = 0;
  if (count > 0) {
    auto data = buffer.data();
    const TensorShape& shape = buffer.shape();
#pragma omp parallel for num_threads(static_cast<int>(count)) schedule(static, 1) \
    reduction(+ : swapped)
    for (std::ptrdiff_t r = 0; r < count; ++r) {
      const PairRange& range = ranges[r];
      swapped += detail::swap_pairs(data, shape, range.region, range.start_pair, range.end_pair);
    }
  }
  if (stats) {
    stats->record(region, swapped);
    stats->workers = std::max(stats->workers, ranges.size());
    stats->worker_state_bytes = worker_state_bytes(region.rank());
  }
}

/// rotate_in_place run as two barrier-separated parallel stages.
///
/// Stage 1 reverses the whole tensor. Stage 2 concatenates the pair sequences
/// of all non-empty blocks (ascending BlockId) into one virtual sequence and
/// splits it evenly, so skewed block sizes still balance. The end of each
/// OpenMP parallel region is the barrier between stages.
template <class T>
void rotate_in_place_parallel(TensorBuffer<T>& buffer, std::span<const std::int64_t> shift,
                              std::size_t workers, Instrumentation* stats = nullptr) {
  require_workers(workers);
  const TensorShape& shape = buffer.shape();
  const ShiftVector k = normalize_shift(shift, shape);
  if (shape.empty()) return;
  const std::size_t w = effective_workers(workers, shape.element_count());

  // Stage 1
  reverse_region_parallel(buffer, Region::whole(shape), w, stats);

  // Stage 2
  std::size_t stage2_pairs = 0;
  std::size_t log_base = 0;
  if (stats) {
    stats->stage1_pairs += shape.element_count() / 2;
    log_base = stats->log.size();
  }
  for_each_valid_block(k, shape, [&](BlockId, const Region& region) {
    stage2_pairs += region.pair_count();
    if (stats) stats->log.push_back({region, 0});
  });

  const std::size_t parts = std::min(w, stage2_pairs);
  std::uint64_t swapped = 0;
  if (parts > 0) {
    auto data = buffer.data();
    ReversalRecord* log = stats ? stats->log.data() + log_base : nullptr;
#pragma omp parallel for num_threads(static_cast<int>(parts)) schedule(static, 1) \
    reduction(+ : swapped)
    for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(parts); ++p) {
      const Slice mine = even_slice(stage2_pairs, parts, static_cast<std::size_t>(p));
      std::size_t offset = 0;
      std::size_t block_index = 0;
      for_each_valid_block(k, shape, [&](BlockId, const Region& region) {
        const std::size_t pairs = region.pair_count();
        const std::size_t lo = std::max(mine.first, offset);
        const std::size_t hi = std::min(mine.last, offset + pairs);
        if (lo < hi) {
          const std::uint64_t s = detail::swap_pairs(data, shape, region, lo - offset, hi - offset);
          swapped += s;
          if (log) {
#pragma omp atomic
            log[block_index].swaps += s;
          }
        }
        offset += pairs;
        ++block_index;
      });
    }
  }
  if (stats) {
    const std::size_t blocks = stats->log.size() - log_base;
    stats->reversals += blocks;
    stats->swaps += swapped;
    stats->stage2_pairs += stage2_pairs;
    stats->workers = std::max(stats->workers, w);
    stats->worker_state_bytes = worker_state_bytes(shape.rank());
  }
}

template <class T>
void rotate_in_place_parallel(TensorBuffer<T>& buffer, std::initializer_list<std::int64_t> shift,
                              std::size_t workers, Instrumentation* stats = nullptr) {
  rotate_in_place_parallel(buffer, std::span<const std::int64_t>(shift.begin(), shift.size()),
                           workers, stats);
}

}  // namespace rotnd
