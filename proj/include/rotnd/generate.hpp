#pragma once

// Deterministic generators. Built only on std::mt19937_64, whose output
// sequence is fixed by the standard, so a seed reproduces the same bytes on
// every conforming platform (the std distributions are not portable).

#include <cstdint>
#include <random>

#include "rotnd/tensor_io.hpp"

namespace rotnd {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound >= 1, by rejection sampling.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform integer in [lo, hi].
std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Largest r with r^k <= x (k >= 1).
std::uint64_t integer_root(std::uint64_t x, unsigned k);

/// 1, 2, 3, ... in row-major order (wrapping for u8).
void fill_iota(AnyTensor& tensor);

/// f64 in [0, 1) from 53 random bits; i64 from all 64 bits; u8 from the top 8.
void fill_random(AnyTensor& tensor, Rng& rng);

template <class T>
void fill_iota(TensorBuffer<T>& t) {
  T v{};
  for (T& x : t.data()) {
    v = static_cast<T>(v + 1);
    x = v;
  }
}

}  // namespace rotnd
