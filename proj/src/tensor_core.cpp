#include "rotnd/tensor_core.hpp"

#include <cstdint>
#include <limits>

namespace rotnd {

namespace {

// Largest element count a contiguous buffer can address.
constexpr unsigned __int128 kMaxElements =
    static_cast<unsigned __int128>(std::numeric_limits<std::ptrdiff_t>::max());

void require_same_rank(std::span<const std::size_t> idx, std::size_t rank, const char* what) {
  if (idx.size() != rank) {
    throw ShapeError(std::string(what) + ": index has " + std::to_string(idx.size()) +
                     " components, expected " + std::to_string(rank));
  }
}

void require_inside(std::span<const std::size_t> idx, const Region& region, const char* what) {
  require_same_rank(idx, region.rank(), what);
  if (!region.contains(idx)) {
    throw ContractError(std::string(what) + ": index " + format_index(idx) + " is outside region " +
                        region.to_string());
  }
}

}  // namespace

TensorShape::TensorShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ShapeError("tensor shape needs at least one dimension");
  if (dims_.size() > kMaxRank) {
    throw ShapeError("tensor rank " + std::to_string(dims_.size()) + " exceeds the limit of " +
                     std::to_string(kMaxRank));
  }
  unsigned __int128 count = 1;
  bool has_zero = false;
  for (std::size_t d : dims_) {
    if (d == 0) has_zero = true;
  }
  if (!has_zero) {
    for (std::size_t d : dims_) {
      count *= d;
      if (count > kMaxElements) {
        throw ShapeError("element count of shape " + to_string() + " is not addressable");
      }
    }
  } else {
    count = 0;
  }
  count_ = static_cast<std::size_t>(count);
}

std::vector<std::size_t> TensorShape::strides() const {
  std::vector<std::size_t> out(dims_.size());
  std::size_t acc = 1;
  for (std::size_t l = dims_.size(); l-- > 0;) {
    out[l] = acc;
    acc *= dims_[l];
  }
  return out;
}

std::string TensorShape::to_string() const { return format_index(dims_); }

Region Region::whole(const TensorShape& shape) {
  if (shape.empty()) throw BoundsError("an empty tensor has no whole-tensor region");
  Region r{IndexVector(shape.rank(), 0), IndexVector(shape.rank())};
  for (std::size_t l = 0; l < shape.rank(); ++l) r.end[l] = shape[l] - 1;
  return r;
}

bool Region::valid() const noexcept {
  if (start.empty() || start.size() != end.size()) return false;
  for (std::size_t l = 0; l < start.size(); ++l) {
    if (start[l] > end[l]) return false;
  }
  return true;
}

bool Region::fits(const TensorShape& shape) const noexcept {
  if (!valid() || rank() != shape.rank()) return false;
  for (std::size_t l = 0; l < rank(); ++l) {
    if (end[l] >= shape[l]) return false;
  }
  return true;
}

bool Region::contains(std::span<const std::size_t> idx) const noexcept {
  if (idx.size() != rank()) return false;
  for (std::size_t l = 0; l < rank(); ++l) {
    if (idx[l] < start[l] || idx[l] > end[l]) return false;
  }
  return true;
}

std::size_t Region::element_count() const noexcept {
  std::size_t n = 1;
  for (std::size_t l = 0; l < rank(); ++l) n *= extent(l);
  return n;
}

std::string Region::to_string() const { return format_index(start) + "-" + format_index(end); }

void require_region_in(const Region& region, const TensorShape& shape) {
  if (!region.valid()) throw BoundsError("region " + region.to_string() + " is not valid");
  if (region.rank() != shape.rank()) {
    throw BoundsError("region " + region.to_string() + " has rank " +
                      std::to_string(region.rank()) + " but tensor has rank " +
                      std::to_string(shape.rank()));
  }
  if (!region.fits(shape)) {
    throw BoundsError("region " + region.to_string() + " exceeds tensor shape " +
                      shape.to_string());
  }
}

std::size_t linearize(const TensorShape& shape, std::span<const std::size_t> idx) {
  require_same_rank(idx, shape.rank(), "linearize");
  std::size_t offset = 0;
  for (std::size_t l = 0; l < shape.rank(); ++l) {
    if (idx[l] >= shape[l]) throw IndexError(l, idx[l], shape[l]);
    offset = offset * shape[l] + idx[l];
  }
  return offset;
}

IndexVector delinearize(const TensorShape& shape, std::size_t offset) {
  if (offset >= shape.element_count()) {
    throw RangeError("offset " + std::to_string(offset) + " out of range for shape " +
                     shape.to_string());
  }
  IndexVector idx(shape.rank());
  for (std::size_t l = shape.rank(); l-- > 0;) {
    idx[l] = offset % shape[l];
    offset /= shape[l];
  }
  return idx;
}

bool increment_in_region(IndexVector& idx, const Region& region) {
  require_inside(idx, region, "increment_in_region");
  for (std::size_t d = region.rank(); d-- > 0;) {
    if (idx[d] < region.end[d]) {
      ++idx[d];
      return true;
    }
    idx[d] = region.start[d];
  }
  return false;
}

IndexVector mirror_index(std::span<const std::size_t> idx, const Region& region) {
  require_inside(idx, region, "mirror_index");
  IndexVector j(idx.size());
  for (std::size_t l = 0; l < idx.size(); ++l) j[l] = region.start[l] + region.end[l] - idx[l];
  return j;
}

IndexVector unrank_region_index(std::size_t p, const Region& region) {
  if (!region.valid()) throw BoundsError("region " + region.to_string() + " is not valid");
  if (p >= region.element_count()) {
    throw RangeError("rank " + std::to_string(p) + " out of range for region " +
                     region.to_string() + " of " + std::to_string(region.element_count()) +
                     " elements");
  }
  IndexVector idx(region.rank());
  for (std::size_t l = region.rank(); l-- > 0;) {
    const std::size_t ext = region.extent(l);
    idx[l] = region.start[l] + p % ext;
    p /= ext;
  }
  return idx;
}

std::size_t rank_region_index(std::span<const std::size_t> idx, const Region& region) {
  require_inside(idx, region, "rank_region_index");
  std::size_t p = 0;
  for (std::size_t l = 0; l < region.rank(); ++l) {
    p = p * region.extent(l) + (idx[l] - region.start[l]);
  }
  return p;
}

std::string format_index(std::span<const std::size_t> idx) {
  std::string s = "(";
  for (std::size_t l = 0; l < idx.size(); ++l) {
    if (l) s += ',';
    s += std::to_string(idx[l]);
  }
  return s + ")";
}

std::string format_shift(std::span<const std::int64_t> shift) {
  std::string s = "(";
  for (std::size_t l = 0; l < shift.size(); ++l) {
    if (l) s += ',';
    s += std::to_string(shift[l]);
  }
  return s + ")";
}

}  // namespace rotnd
