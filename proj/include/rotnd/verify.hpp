#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>

#include "rotnd/generate.hpp"
#include "rotnd/tensor_core.hpp"

namespace rotnd {

struct VerifyConfig {
  std::size_t trials = 100;
  std::size_t max_dims = 4;
  std::size_t max_elems = 10000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

/// A randomized rotation case.
struct Trial {
  TensorBuffer<std::int64_t> input;
  ShiftVector shift;
};

/// Rank in [1, max_dims], extents >= 1 with product <= max_elems, shift
/// components in [-2 d_l, 2 d_l], random i64 contents.
Trial make_trial(Rng& rng, std::size_t max_dims, std::size_t max_elems);

/// The in-place rotation under test. Replaceable so a deliberately broken
/// implementation can be shown to fail.
using RotateFn = std::function<void(TensorBuffer<std::int64_t>&, std::span<const std::int64_t>)>;

/// First multi-index where two same-shaped tensors differ.
template <class T>
std::optional<IndexVector> first_difference(const TensorBuffer<T>& a, const TensorBuffer<T>& b) {
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t e = 0; e < da.size(); ++e) {
    if (da[e] != db[e]) return delinearize(a.shape(), e);
  }
  return std::nullopt;
}

/// Throws ContractError unless trials >= 1, max_dims in [1, 8], max_elems >= 1
/// and workers >= 1.
void validate(const VerifyConfig& config);

/// Runs config.trials comparisons of `rotate` (and, when workers > 1, the
/// parallel rotation) against oracle_rotate. Writes one line per trial and a
/// summary to `out`; the report depends only on the config. Returns 0 when
/// every trial passes, 1 otherwise.
int run_verify(const VerifyConfig& config, std::ostream& out, const RotateFn& rotate = {});

}  // namespace rotnd
