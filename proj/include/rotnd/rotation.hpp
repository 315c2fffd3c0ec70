#pragma once

#include <cstdint>
#include <optional>

#include "rotnd/instrumentation.hpp"
#include "rotnd/reversal.hpp"
#include "rotnd/tensor_core.hpp"

namespace rotnd {

/// Selects one of the 2^n blocks cut by the shift: bit l clear picks
/// [0, k_l - 1] along dimension l, bit l set picks [k_l, d_l - 1].
struct BlockId {
  std::uint64_t bits = 0;

  bool high(std::size_t l) const noexcept { return (bits >> l) & 1u; }
  /// The diametrically opposite block.
  BlockId complement(std::size_t rank) const noexcept {
    const std::uint64_t mask = rank >= 64 ? ~0ull : ((1ull << rank) - 1);
    return {~bits & mask};
  }

  friend bool operator==(BlockId, BlockId) = default;
};

/// Number of block selectors for a rank, 2^n.
inline std::uint64_t block_id_count(std::size_t rank) noexcept { return 1ull << rank; }

/// Euclidean modulo per component into [0, d_l); zero when d_l <= 1.
ShiftVector normalize_shift(std::span<const std::int64_t> shift, const TensorShape& shape);

/// The block's index range, or nullopt when it is empty along any dimension.
/// `shift` must already be normalized.
std::optional<Region> block_region(BlockId block, std::span<const std::int64_t> shift,
                                   const TensorShape& shape);

/// Block of the partition that contains idx.
BlockId block_of(std::span<const std::size_t> idx, std::span<const std::int64_t> shift);

/// prod_l (2 if 0 < k_l < d_l else 1) for a normalized shift.
std::uint64_t valid_block_count(std::span<const std::int64_t> shift, const TensorShape& shape);

/// Calls fn(BlockId, Region) for every non-empty block in ascending BlockId
/// order. Only dimensions with 0 < k_l < d_l contribute two choices, so the
/// walk costs the number of valid blocks, not 2^n. Requires a non-empty shape
/// and a normalized shift.
template <class Fn>
void for_each_valid_block(std::span<const std::int64_t> shift, const TensorShape& shape, Fn&& fn) {
  std::uint64_t split = 0;
  std::uint64_t fixed = 0;
  for (std::size_t l = 0; l < shape.rank(); ++l) {
    if (shift[l] > 0) {
      split |= 1ull << l;
    } else {
      fixed |= 1ull << l;  // k_l == 0: only the high interval [0, d_l - 1] is non-empty
    }
  }
  std::uint64_t sub = 0;
  do {
    const BlockId id{fixed | sub};
    fn(id, *block_region(id, shift, shape));
    sub = (sub - split) & split;
  } while (sub != 0);
}

/// Cyclic shift in place: the element at i ends at (i_l + k_l) mod d_l.
///
/// One whole-tensor reversal followed by a reversal of every non-empty block,
/// visited in ascending BlockId order. Auxiliary memory is O(n) index state.
/// An empty tensor is a no-op; a rank mismatch throws ShapeError.
template <class T>
void rotate_in_place(TensorBuffer<T>& buffer, std::span<const std::int64_t> shift,
                     Instrumentation* stats = nullptr) {
  const TensorShape& shape = buffer.shape();
  const ShiftVector k = normalize_shift(shift, shape);
  if (shape.empty()) return;

  reverse_full(buffer, stats);

  for_each_valid_block(k, shape,
                       [&](BlockId, const Region& region) { reverse_region(buffer, region, stats); });
}

template <class T>
void rotate_in_place(TensorBuffer<T>& buffer, std::initializer_list<std::int64_t> shift,
                     Instrumentation* stats = nullptr) {
  rotate_in_place(buffer, std::span<const std::int64_t>(shift.begin(), shift.size()), stats);
}

}  // namespace rotnd
