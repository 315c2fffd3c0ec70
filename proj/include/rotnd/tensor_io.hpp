#pragma once

// Binary tensor file:
//
//   offset  size      field
//   0       4         magic "NTRT"
//   4       1         version (1)
//   5       1         dtype code (0 = f64, 1 = i64, 2 = u8)
//   6       1         ndim, 1..63
//   7       1         reserved, 0
//   8       8*ndim    extents, u64 little-endian
//   ...     N*size    payload, little-endian, row-major

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <variant>
#include <vector>

#include "rotnd/tensor_core.hpp"

namespace rotnd {

enum class DType : std::uint8_t { F64 = 0, I64 = 1, U8 = 2 };

using AnyTensor = std::variant<TensorBuffer<double>, TensorBuffer<std::int64_t>,
                               TensorBuffer<std::uint8_t>>;

template <class T>
constexpr DType dtype_of();
template <>
constexpr DType dtype_of<double>() { return DType::F64; }
template <>
constexpr DType dtype_of<std::int64_t>() { return DType::I64; }
template <>
constexpr DType dtype_of<std::uint8_t>() { return DType::U8; }

std::size_t dtype_size(DType dtype) noexcept;
std::string_view dtype_name(DType dtype) noexcept;
/// "f64" | "i64" | "u8"; throws FormatError otherwise.
DType parse_dtype(std::string_view name);

DType dtype_of(const AnyTensor& tensor) noexcept;
const TensorShape& shape_of(const AnyTensor& tensor) noexcept;

/// Zero-filled tensor of the given element type.
AnyTensor make_tensor(DType dtype, TensorShape shape);

inline constexpr char kTensorMagic[4] = {'N', 'T', 'R', 'T'};
inline constexpr std::uint8_t kTensorVersion = 1;

std::vector<std::byte> encode_tensor(const AnyTensor& tensor);
/// Throws a FormatError subclass naming what is wrong with the bytes.
AnyTensor decode_tensor(std::span<const std::byte> bytes);

/// Throws IoError on filesystem failure, FormatError on bad content.
AnyTensor read_tensor(const std::filesystem::path& path);
void write_tensor(const std::filesystem::path& path, const AnyTensor& tensor);

/// Bitwise payload equality (NaN-safe for f64).
bool same_bits(const AnyTensor& a, const AnyTensor& b) noexcept;

}  // namespace rotnd
