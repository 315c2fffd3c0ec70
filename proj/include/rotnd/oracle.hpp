#pragma once

// Copy-based reference implementations. They allocate a full output buffer and
// share no code with the in-place kernels beyond index arithmetic.

#include <cstdint>

#include "rotnd/tensor_core.hpp"

namespace rotnd {

/// Fresh rotated tensor, filled destination-first: out[j] = in[(j - k) mod d].
template <class T>
TensorBuffer<T> oracle_rotate(const TensorBuffer<T>& in, std::span<const std::int64_t> shift) {
  const TensorShape& shape = in.shape();
  if (shift.size() != shape.rank()) {
    throw ShapeError("shift has " + std::to_string(shift.size()) + " components but tensor " +
                     shape.to_string() + " has rank " + std::to_string(shape.rank()));
  }
  TensorBuffer<T> out(shape);
  if (shape.empty()) return out;

  const Region all = Region::whole(shape);
  IndexVector dst = all.start;
  IndexVector src(shape.rank());
  std::size_t flat = 0;
  do {
    for (std::size_t l = 0; l < shape.rank(); ++l) {
      // (j - k) mod d in 128-bit so any int64 shift is exact.
      const __int128 d = static_cast<__int128>(shape[l]);
      __int128 v = (static_cast<__int128>(dst[l]) - shift[l]) % d;
      if (v < 0) v += d;
      src[l] = static_cast<std::size_t>(v);
    }
    out.data()[flat++] = in.data()[linearize(shape, src)];
  } while (increment_in_region(dst, all));
  return out;
}

template <class T>
TensorBuffer<T> oracle_rotate(const TensorBuffer<T>& in, std::initializer_list<std::int64_t> shift) {
  return oracle_rotate(in, std::span<const std::int64_t>(shift.begin(), shift.size()));
}

/// Fresh tensor equal to `in` except inside the region, where
/// out[i] = in[s + e - i].
template <class T>
TensorBuffer<T> oracle_reverse(const TensorBuffer<T>& in, const Region& region) {
  require_region_in(region, in.shape());
  TensorBuffer<T> out = in;
  IndexVector idx = region.start;
  do {
    out.at(idx) = in.at(mirror_index(idx, region));
  } while (increment_in_region(idx, region));
  return out;
}

}  // namespace rotnd
