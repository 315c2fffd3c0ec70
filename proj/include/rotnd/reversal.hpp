#pragma once

#include <algorithm>
#include <cstdint>

#include "rotnd/detail/swap_kernel.hpp"
#include "rotnd/instrumentation.hpp"
#include "rotnd/tensor_core.hpp"

namespace rotnd {

/// Reverses a sub-tensor in place: the element at i moves to s + e - i.
///
/// Exactly floor(|R| / 2) swaps; the centre element of an odd-sized region is
/// never touched and nothing outside the region is written. The region is
/// validated before any element moves, so a BoundsError leaves the buffer
/// unchanged.
template <class T>
void reverse_region(TensorBuffer<T>& buffer, const Region& region,
                    Instrumentation* stats = nullptr) {
  require_region_in(region, buffer.shape());
  const std::uint64_t swapped =
      detail::swap_pairs(buffer.data(), buffer.shape(), region, 0, region.pair_count());
  if (stats) stats->record(region, swapped);
}

/// Reverses the whole tensor. Row-major order makes this a flat reversal.
template <class T>
void reverse_full(TensorBuffer<T>& buffer, Instrumentation* stats = nullptr) {
  if (buffer.shape().empty()) return;
  auto data = buffer.data();
  std::reverse(data.begin(), data.end());
  if (stats) stats->record(Region::whole(buffer.shape()), data.size() / 2);
}

/// What the literal odometer reversal did.
struct ReferenceReversalTrace {
  std::uint64_t swaps = 0;
  // Times the "all indices exhausted" exit fired instead of the midpoint check.
  std::uint64_t exhausted_exits = 0;
};

/// Serial reference reversal, one swap per iteration: compute the mirror,
/// stop once i >= j lexicographically, swap, then odometer-increment i.
/// Kept for testing the fast kernels; it relinearizes both indices per swap.
template <class T>
ReferenceReversalTrace reverse_region_reference(TensorBuffer<T>& buffer, const Region& region) {
  require_region_in(region, buffer.shape());
  ReferenceReversalTrace trace;
  const std::size_t n = region.rank();
  IndexVector i = region.start;
  IndexVector j(n);
  for (;;) {
    for (std::size_t l = 0; l < n; ++l) j[l] = region.start[l] + region.end[l] - i[l];
    if (!std::lexicographical_compare(i.begin(), i.end(), j.begin(), j.end())) break;
    std::swap(buffer.data()[linearize(buffer.shape(), i)],
              buffer.data()[linearize(buffer.shape(), j)]);
    ++trace.swaps;

    std::ptrdiff_t d = static_cast<std::ptrdiff_t>(n) - 1;
    while (d >= 0) {
      if (i[d] < region.end[d]) {
        ++i[d];
        break;
      }
      i[d] = region.start[d];
      --d;
    }
    if (d < 0) {
      ++trace.exhausted_exits;
      break;
    }
  }
  return trace;
}

}  // namespace rotnd
