#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rotnd/errors.hpp"

namespace rotnd {

/// One non-negative component per dimension.
using IndexVector = std::vector<std::size_t>;

/// Signed cyclic shift per dimension, before normalization.
using ShiftVector = std::vector<std::int64_t>;

/// Largest dimensionality the library accepts (block selectors must fit a word).
inline constexpr std::size_t kMaxRank = 63;

/// Extents of an n-dimensional row-major tensor.
///
/// The element count is computed with 128-bit arithmetic at construction and
/// rejected when it cannot be addressed. Zero extents are allowed.
class TensorShape {
 public:
  explicit TensorShape(std::vector<std::size_t> dims);
  TensorShape(std::initializer_list<std::size_t> dims)
      : TensorShape(std::vector<std::size_t>(dims)) {}

  std::size_t rank() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t l) const noexcept { return dims_[l]; }
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  std::size_t element_count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// Row-major strides: stride[l] = prod_{m>l} d_m.
  std::vector<std::size_t> strides() const;

  std::string to_string() const;

  friend bool operator==(const TensorShape&, const TensorShape&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t count_ = 0;
};

/// Axis-aligned hyperrectangle with inclusive bounds on both ends.
struct Region {
  IndexVector start;
  IndexVector end;

  /// The region covering every element of a non-empty shape.
  static Region whole(const TensorShape& shape);

  std::size_t rank() const noexcept { return start.size(); }

  /// Same rank on both ends and start <= end componentwise.
  bool valid() const noexcept;
  bool fits(const TensorShape& shape) const noexcept;
  bool contains(std::span<const std::size_t> idx) const noexcept;

  std::size_t extent(std::size_t l) const noexcept { return end[l] - start[l] + 1; }
  /// Product of extents. Requires valid().
  std::size_t element_count() const noexcept;
  /// Number of disjoint (index, mirror) swap pairs, floor(|R| / 2).
  std::size_t pair_count() const noexcept { return element_count() / 2; }

  std::string to_string() const;

  friend bool operator==(const Region&, const Region&) = default;
};

/// Throws BoundsError unless the region is valid and lies inside the shape.
void require_region_in(const Region& region, const TensorShape& shape);

/// Row-major offset of idx. Throws IndexError naming the first bad dimension.
std::size_t linearize(const TensorShape& shape, std::span<const std::size_t> idx);

/// Inverse of linearize over the full tensor.
IndexVector delinearize(const TensorShape& shape, std::size_t offset);

/// Advances idx to its lexicographic successor inside the region
/// (rightmost dimension first, carrying left). Returns false when idx was the
/// region maximum; idx then wraps to region.start.
[[nodiscard]] bool increment_in_region(IndexVector& idx, const Region& region);

/// s + e - i, componentwise. Requires idx inside region.
IndexVector mirror_index(std::span<const std::size_t> idx, const Region& region);

/// The p-th index of the region in lexicographic order.
IndexVector unrank_region_index(std::size_t p, const Region& region);

/// Lexicographic position of idx inside the region; inverse of unrank_region_index.
std::size_t rank_region_index(std::span<const std::size_t> idx, const Region& region);

std::string format_index(std::span<const std::size_t> idx);
std::string format_shift(std::span<const std::int64_t> shift);

/// Flat row-major element store bound to a shape.
template <class T>
class TensorBuffer {
  static_assert(std::is_trivially_copyable_v<T>, "tensor elements must be trivially copyable");

 public:
  using value_type = T;

  explicit TensorBuffer(TensorShape shape)
      : shape_(std::move(shape)), data_(shape_.element_count()) {}

  TensorBuffer(TensorShape shape, std::vector<T> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != shape_.element_count()) {
      throw ShapeError("buffer holds " + std::to_string(data_.size()) + " elements but shape " +
                       shape_.to_string() + " needs " + std::to_string(shape_.element_count()));
    }
  }

  const TensorShape& shape() const noexcept { return shape_; }
  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }

  T& at(std::span<const std::size_t> idx) { return data_[linearize(shape_, idx)]; }
  const T& at(std::span<const std::size_t> idx) const { return data_[linearize(shape_, idx)]; }
  T& at(std::initializer_list<std::size_t> idx) {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  const T& at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  friend bool operator==(const TensorBuffer&, const TensorBuffer&) = default;

 private:
  TensorShape shape_;
  std::vector<T> data_;
};

}  // namespace rotnd
