#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>

#include "rotnd/tensor_core.hpp"

namespace rotnd::detail {

/// Swaps pairs [first, last) of a region's pair sequence, where pair p is
/// (unrank(p), mirror(unrank(p))) and p < floor(|R| / 2). Walks the region a
/// row at a time along the last dimension; the mirror row is walked backwards.
/// Returns the number of swaps performed.
///
/// Preconditions (unchecked): region fits shape, data.size() == element count,
/// first <= last <= region.pair_count().
template <class T>
std::uint64_t swap_pairs(std::span<T> data, const TensorShape& shape, const Region& region,
                         std::size_t first, std::size_t last) {
  if (first >= last) return 0;
  const std::size_t inner = region.rank() - 1;
  const std::vector<std::size_t> stride = shape.strides();
  IndexVector i = unrank_region_index(first, region);

  // row_i: offset of (i_0..i_{n-2}, s_inner); row_j: offset of the mirror row at e_inner.
  std::size_t row_i = region.start[inner];
  std::size_t row_j = region.end[inner];
  for (std::size_t l = 0; l < inner; ++l) {
    row_i += i[l] * stride[l];
    row_j += (region.start[l] + region.end[l] - i[l]) * stride[l];
  }
  const std::size_t width = region.extent(inner);
  std::size_t col = i[inner] - region.start[inner];
  std::size_t remaining = last - first;
  std::uint64_t swapped = 0;
  T* const base = data.data();

  for (;;) {
    const std::size_t run = std::min(remaining, width - col);
    T* a = base + row_i + col;
    T* b = base + row_j - col;
    for (std::size_t t = 0; t < run; ++t) std::swap(a[t], *(b - t));
    swapped += run;
    remaining -= run;
    if (remaining == 0) break;
    col = 0;
    // Odometer carry over the outer dimensions; the mirror moves opposite.
    std::size_t d = inner;
    for (;;) {
      if (d == 0) throw std::logic_error("swap_pairs: pair range runs past the region");
      --d;
      if (i[d] < region.end[d]) {
        ++i[d];
        row_i += stride[d];
        row_j -= stride[d];
        break;
      }
      const std::size_t back = (region.end[d] - region.start[d]) * stride[d];
      row_i -= back;
      row_j += back;
      i[d] = region.start[d];
    }
  }
  return swapped;
}

}  // namespace rotnd::detail
