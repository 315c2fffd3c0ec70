#include "rotnd/tensor_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>

namespace rotnd {

namespace {

constexpr std::size_t kFixedHeader = 8;

template <class U>
void put_le(std::vector<std::byte>& out, U value) {
  static_assert(std::is_unsigned_v<U>);
  for (std::size_t b = 0; b < sizeof(U); ++b) {
    out.push_back(static_cast<std::byte>((value >> (8 * b)) & 0xFF));
  }
}

template <class U>
U get_le(const std::byte* p) {
  U value = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b) {
    value |= static_cast<U>(std::to_integer<unsigned>(p[b])) << (8 * b);
  }
  return value;
}

template <class T>
using Bits = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint8_t>;

template <class T>
void append_payload(std::vector<std::byte>& out, std::span<const T> data) {
  if constexpr (std::endian::native == std::endian::little) {
    const auto* raw = reinterpret_cast<const std::byte*>(data.data());
    out.insert(out.end(), raw, raw + data.size_bytes());
  } else {
    for (const T& v : data) put_le(out, std::bit_cast<Bits<T>>(v));
  }
}

template <class T>
TensorBuffer<T> read_payload(TensorShape shape, const std::byte* p) {
  TensorBuffer<T> t(std::move(shape));
  auto data = t.data();
  if constexpr (std::endian::native == std::endian::little) {
    if (!data.empty()) std::memcpy(data.data(), p, data.size_bytes());
  } else {
    for (std::size_t e = 0; e < data.size(); ++e) {
      data[e] = std::bit_cast<T>(get_le<Bits<T>>(p + e * sizeof(T)));
    }
  }
  return t;
}

}  // namespace

std::size_t dtype_size(DType dtype) noexcept {
  switch (dtype) {
    case DType::F64:
    case DType::I64:
      return 8;
    case DType::U8:
      return 1;
  }
  return 0;
}

std::string_view dtype_name(DType dtype) noexcept {
  switch (dtype) {
    case DType::F64:
      return "f64";
    case DType::I64:
      return "i64";
    case DType::U8:
      return "u8";
  }
  return "?";
}

DType parse_dtype(std::string_view name) {
  if (name == "f64") return DType::F64;
  if (name == "i64") return DType::I64;
  if (name == "u8") return DType::U8;
  throw BadDTypeError("unknown dtype '" + std::string(name) + "' (expected f64, i64 or u8)");
}

DType dtype_of(const AnyTensor& tensor) noexcept {
  return std::visit([](const auto& t) { return dtype_of<typename std::decay_t<decltype(t)>::value_type>(); },
                    tensor);
}

const TensorShape& shape_of(const AnyTensor& tensor) noexcept {
  return std::visit([](const auto& t) -> const TensorShape& { return t.shape(); }, tensor);
}

AnyTensor make_tensor(DType dtype, TensorShape shape) {
  switch (dtype) {
    case DType::F64:
      return TensorBuffer<double>(std::move(shape));
    case DType::I64:
      return TensorBuffer<std::int64_t>(std::move(shape));
    case DType::U8:
      return TensorBuffer<std::uint8_t>(std::move(shape));
  }
  throw BadDTypeError("unknown dtype code " + std::to_string(static_cast<int>(dtype)));
}

std::vector<std::byte> encode_tensor(const AnyTensor& tensor) {
  const TensorShape& shape = shape_of(tensor);
  const DType dtype = dtype_of(tensor);
  std::vector<std::byte> out;
  out.reserve(kFixedHeader + 8 * shape.rank() + shape.element_count() * dtype_size(dtype));
  for (char c : kTensorMagic) out.push_back(static_cast<std::byte>(c));
  out.push_back(static_cast<std::byte>(kTensorVersion));
  out.push_back(static_cast<std::byte>(dtype));
  out.push_back(static_cast<std::byte>(shape.rank()));
  out.push_back(std::byte{0});
  for (std::size_t d : shape.dims()) put_le<std::uint64_t>(out, d);
  std::visit([&](const auto& t) { append_payload(out, t.data()); }, tensor);
  return out;
}

AnyTensor decode_tensor(std::span<const std::byte> bytes) {
  if (bytes.size() < kFixedHeader) {
    throw TruncatedError("file is " + std::to_string(bytes.size()) +
                         " bytes, shorter than the 8-byte header");
  }
  if (std::memcmp(bytes.data(), kTensorMagic, 4) != 0) throw BadMagicError("bad magic, expected NTRT");
  const auto version = std::to_integer<std::uint8_t>(bytes[4]);
  if (version != kTensorVersion) {
    throw BadVersionError("unsupported version " + std::to_string(version));
  }
  const auto code = std::to_integer<std::uint8_t>(bytes[5]);
  if (code > static_cast<std::uint8_t>(DType::U8)) {
    throw BadDTypeError("unknown dtype code " + std::to_string(code));
  }
  const auto dtype = static_cast<DType>(code);
  const auto ndim = std::to_integer<std::uint8_t>(bytes[6]);
  if (ndim == 0 || ndim > kMaxRank) throw BadRankError("ndim " + std::to_string(ndim) + " not in 1..63");
  if (bytes[7] != std::byte{0}) throw FormatError("reserved header byte is not zero");

  const std::size_t header = kFixedHeader + 8 * std::size_t{ndim};
  if (bytes.size() < header) throw TruncatedError("header declares " + std::to_string(ndim) +
                                                  " dims but the file ends inside them");
  std::vector<std::size_t> dims(ndim);
  unsigned __int128 count = 1;
  bool zero = false;
  for (std::size_t l = 0; l < ndim; ++l) {
    const auto d = get_le<std::uint64_t>(bytes.data() + kFixedHeader + 8 * l);
    if (d > std::numeric_limits<std::size_t>::max()) throw DimsOverflowError("extent overflows size_t");
    dims[l] = static_cast<std::size_t>(d);
    if (d == 0) zero = true;
  }
  if (!zero) {
    for (std::size_t d : dims) {
      count *= d;
      if (count > std::numeric_limits<std::uint64_t>::max()) {
        throw DimsOverflowError("product of extents overflows 64 bits");
      }
    }
  } else {
    count = 0;
  }
  const unsigned __int128 payload = count * dtype_size(dtype);
  const std::size_t available = bytes.size() - header;
  if (payload > available) {
    throw TruncatedError("payload needs " + std::to_string(static_cast<std::uint64_t>(count)) +
                         " elements but only " + std::to_string(available / dtype_size(dtype)) +
                         " are present");
  }
  if (payload < available) {
    throw TrailingDataError(std::to_string(available - static_cast<std::size_t>(payload)) +
                            " unexpected bytes after the payload");
  }

  TensorShape shape = [&] {
    try {
      return TensorShape(std::move(dims));
    } catch (const ShapeError& e) {
      throw DimsOverflowError(e.what());
    }
  }();
  const std::byte* p = bytes.data() + header;
  switch (dtype) {
    case DType::F64:
      return read_payload<double>(std::move(shape), p);
    case DType::I64:
      return read_payload<std::int64_t>(std::move(shape), p);
    case DType::U8:
      return read_payload<std::uint8_t>(std::move(shape), p);
  }
  throw BadDTypeError("unknown dtype");
}

AnyTensor read_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  const std::streamoff size = in.tellg();
  if (size < 0) throw IoError("cannot determine the size of '" + path.string() + "'");
  std::vector<char> raw(static_cast<std::size_t>(size));
  in.seekg(0);
  in.read(raw.data(), size);
  if (!in) throw IoError("error while reading '" + path.string() + "'");
  return decode_tensor(std::as_bytes(std::span(raw)));
}

void write_tensor(const std::filesystem::path& path, const AnyTensor& tensor) {
  const std::vector<std::byte> bytes = encode_tensor(tensor);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

bool same_bits(const AnyTensor& a, const AnyTensor& b) noexcept {
  if (a.index() != b.index() || !(shape_of(a) == shape_of(b))) return false;
  return std::visit(
      [&](const auto& ta) {
        using B = std::decay_t<decltype(ta)>;
        const auto& tb = std::get<B>(b);
        return ta.data().size_bytes() == 0 ||
               std::memcmp(ta.data().data(), tb.data().data(), ta.data().size_bytes()) == 0;
      },
      a);
}

}  // namespace rotnd
