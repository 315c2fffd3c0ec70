#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>

#include "rotnd/generate.hpp"
#include "rotnd/tensor_io.hpp"
#include "support/cases.hpp"

namespace rotnd {
namespace {

namespace fs = std::filesystem;

class TensorFile : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rotnd_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path path(const char* name) const { return dir_ / name; }

  fs::path dir_;
};

std::vector<std::byte> header_for(std::uint8_t dtype, std::vector<std::uint64_t> dims) {
  std::vector<std::byte> b = {std::byte{'N'}, std::byte{'T'}, std::byte{'R'}, std::byte{'T'},
                              std::byte{1},   std::byte{dtype}, std::byte(dims.size()), std::byte{0}};
  for (std::uint64_t d : dims) {
    for (int i = 0; i < 8; ++i) b.push_back(static_cast<std::byte>((d >> (8 * i)) & 0xFF));
  }
  return b;
}

TEST_F(TensorFile, RoundTripIota) {
  AnyTensor t = TensorBuffer<std::int64_t>(TensorShape{7}, {1, 2, 3, 4, 5, 6, 7});
  write_tensor(path("a.bin"), t);
  const AnyTensor back = read_tensor(path("a.bin"));
  EXPECT_TRUE(same_bits(t, back));
  EXPECT_EQ(std::get<TensorBuffer<std::int64_t>>(back), std::get<TensorBuffer<std::int64_t>>(t));
}

TEST_F(TensorFile, RandomRoundTripAllDtypes) {
  Rng rng(50);
  for (int trial = 0; trial < 60; ++trial) {
    const DType dtype = static_cast<DType>(trial % 3);
    AnyTensor t = make_tensor(dtype, testing::random_shape(rng, 5, 3000));
    fill_random(t, rng);
    write_tensor(path("r.bin"), t);
    ASSERT_TRUE(same_bits(t, read_tensor(path("r.bin"))));
  }
}

TEST(TensorCodec, FileSizes) {
  // 4 + 1 + 1 + 1 + 1 + 8 + 5*8 = 56
  EXPECT_EQ(encode_tensor(TensorBuffer<double>(TensorShape{5})).size(), 56u);
  // 4 + 1 + 1 + 1 + 1 + 16 + 6 = 30
  EXPECT_EQ(encode_tensor(TensorBuffer<std::uint8_t>(TensorShape{2, 3})).size(), 30u);
}

TEST(TensorCodec, ExactBytes) {
  const auto bytes = encode_tensor(TensorBuffer<std::int64_t>(TensorShape{2}, {1, -2}));
  auto expected = header_for(1, {2});
  for (std::uint64_t v : {std::uint64_t{1}, static_cast<std::uint64_t>(-2)}) {
    for (int i = 0; i < 8; ++i) expected.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xFF));
  }
  EXPECT_EQ(bytes, expected);
}

TEST(TensorCodec, NanPayloadSurvivesBitwise) {
  TensorBuffer<double> t(TensorShape{2});
  t.data()[0] = std::numeric_limits<double>::quiet_NaN();
  t.data()[1] = -0.0;
  const AnyTensor any = t;
  EXPECT_TRUE(same_bits(any, decode_tensor(encode_tensor(any))));
}

TEST(TensorCodec, ParseErrors) {
  auto ok = encode_tensor(TensorBuffer<std::int64_t>(TensorShape{5, 7}));

  auto magic = ok;
  std::memcpy(magic.data(), "XXXX", 4);
  EXPECT_THROW(decode_tensor(magic), BadMagicError);

  auto version = ok;
  version[4] = std::byte{2};
  EXPECT_THROW(decode_tensor(version), BadVersionError);

  auto dtype = ok;
  dtype[5] = std::byte{3};
  EXPECT_THROW(decode_tensor(dtype), BadDTypeError);

  auto rank = ok;
  rank[6] = std::byte{0};
  EXPECT_THROW(decode_tensor(rank), BadRankError);

  auto truncated = ok;
  truncated.resize(truncated.size() - 8);  // 34 of 35 elements
  EXPECT_THROW(decode_tensor(truncated), TruncatedError);

  EXPECT_THROW(decode_tensor(std::span(ok).first(5)), TruncatedError);
  EXPECT_THROW(decode_tensor(std::span(ok).first(12)), TruncatedError);

  auto trailing = ok;
  trailing.push_back(std::byte{0});
  EXPECT_THROW(decode_tensor(trailing), TrailingDataError);

  const auto overflow = header_for(2, {std::uint64_t{1} << 40, std::uint64_t{1} << 40});
  EXPECT_THROW(decode_tensor(overflow), DimsOverflowError);

  auto reserved = ok;
  reserved[7] = std::byte{1};
  EXPECT_THROW(decode_tensor(reserved), FormatError);
}

TEST(TensorCodec, ZeroExtentHasEmptyPayload) {
  const AnyTensor t = TensorBuffer<double>(TensorShape{3, 0});
  const auto bytes = encode_tensor(t);
  EXPECT_EQ(bytes.size(), 8u + 16u);
  EXPECT_TRUE(same_bits(t, decode_tensor(bytes)));
}

TEST_F(TensorFile, MissingFileIsIoError) {
  EXPECT_THROW(read_tensor(path("absent.bin")), IoError);
  EXPECT_THROW(write_tensor(dir_ / "no" / "such" / "dir.bin", TensorBuffer<double>(TensorShape{1})),
               IoError);
}

TEST(Dtype, Names) {
  for (DType d : {DType::F64, DType::I64, DType::U8}) EXPECT_EQ(parse_dtype(dtype_name(d)), d);
  EXPECT_THROW(parse_dtype("f32"), BadDTypeError);
}

}  // namespace
}  // namespace rotnd
