#include "rotnd/rotation.hpp"

namespace rotnd {

namespace {

void require_shift_rank(std::span<const std::int64_t> shift, const TensorShape& shape) {
  if (shift.size() != shape.rank()) {
    throw ShapeError("shift has " + std::to_string(shift.size()) + " components but tensor " +
                     shape.to_string() + " has rank " + std::to_string(shape.rank()));
  }
}

// Euclidean k mod d without signed overflow for any int64 k and d >= 2.
std::int64_t euclid_mod(std::int64_t k, std::size_t d) {
  const auto ud = static_cast<std::uint64_t>(d);
  if (k >= 0) return static_cast<std::int64_t>(static_cast<std::uint64_t>(k) % ud);
  const std::uint64_t m = static_cast<std::uint64_t>(-(k + 1)) % ud;  // |k| - 1, reduced
  return static_cast<std::int64_t>(ud - 1 - m);
}

}  // namespace

ShiftVector normalize_shift(std::span<const std::int64_t> shift, const TensorShape& shape) {
  require_shift_rank(shift, shape);
  ShiftVector k(shift.size());
  for (std::size_t l = 0; l < shift.size(); ++l) {
    k[l] = shape[l] <= 1 ? 0 : euclid_mod(shift[l], shape[l]);
  }
  return k;
}

std::optional<Region> block_region(BlockId block, std::span<const std::int64_t> shift,
                                   const TensorShape& shape) {
  require_shift_rank(shift, shape);
  Region r{IndexVector(shape.rank()), IndexVector(shape.rank())};
  for (std::size_t l = 0; l < shape.rank(); ++l) {
    const auto k = static_cast<std::size_t>(shift[l]);
    const std::size_t lo = block.high(l) ? k : 0;
    const std::size_t hi = block.high(l) ? shape[l] : k;  // exclusive
    if (lo >= hi) return std::nullopt;
    r.start[l] = lo;
    r.end[l] = hi - 1;
  }
  return r;
}

BlockId block_of(std::span<const std::size_t> idx, std::span<const std::int64_t> shift) {
  BlockId b;
  for (std::size_t l = 0; l < idx.size(); ++l) {
    if (idx[l] >= static_cast<std::size_t>(shift[l])) b.bits |= 1ull << l;
  }
  return b;
}

std::uint64_t valid_block_count(std::span<const std::int64_t> shift, const TensorShape& shape) {
  require_shift_rank(shift, shape);
  if (shape.empty()) return 0;
  std::uint64_t count = 1;
  for (std::size_t l = 0; l < shape.rank(); ++l) {
    if (shift[l] > 0 && static_cast<std::size_t>(shift[l]) < shape[l]) count *= 2;
  }
  return count;
}

}  // namespace rotnd
