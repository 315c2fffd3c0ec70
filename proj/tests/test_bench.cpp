#include <gtest/gtest.h>

#include <sstream>

#include "rotnd/bench.hpp"

namespace rotnd {
namespace {

TEST(Bench, NearCubicShape) {
  EXPECT_EQ(near_cubic_shape(1000000, 3), (TensorShape{100, 100, 100}));
  const TensorShape two_m = near_cubic_shape(2000000, 3);
  EXPECT_NEAR(static_cast<double>(two_m.element_count()), 2e6, 2e6 * 0.01);
  EXPECT_EQ(near_cubic_shape(7, 1), TensorShape{7});
  EXPECT_EQ(near_cubic_shape(1, 4).element_count(), 1u);
}

TEST(Bench, MidShift) { EXPECT_EQ(mid_shift(TensorShape{5, 7, 1}), (ShiftVector{2, 3, 0})); }

TEST(Bench, Median) {
  EXPECT_EQ(median_ns({5, 1, 3}), 3u);
  EXPECT_EQ(median_ns({4, 1, 3, 2}), 2u);
  EXPECT_THROW(median_ns({}), ContractError);
}

TEST(Bench, RejectsBadConfig) {
  EXPECT_THROW(validate(BenchConfig{{1000}, 3, {1}, 2}), ContractError);
  EXPECT_THROW(validate(BenchConfig{{0}, 3, {1}, 3}), ContractError);
  EXPECT_THROW(validate(BenchConfig{{10}, 0, {1}, 3}), ContractError);
  EXPECT_THROW(validate(BenchConfig{{10}, 2, {0}, 3}), ContractError);
  EXPECT_NO_THROW(validate(BenchConfig{{10}, 2, {1}, 3}));
}

TEST(Bench, RecordsAndCsvRoundTrip) {
  const BenchConfig config{{1000, 4000}, 2, {1, 2}, 3, DType::I64};
  const auto records = run_bench(config);
  ASSERT_EQ(records.size(), 4u);
  for (const auto& r : records) {
    EXPECT_EQ(r.repetitions, 3u);
    EXPECT_EQ(r.reversals, 5u);  // both extents >= 2, so all four blocks are non-empty
    EXPECT_EQ(r.shift, mid_shift(r.shape));
  }
  EXPECT_EQ(records[0].workers, 1u);
  EXPECT_EQ(records[1].workers, 2u);
  EXPECT_EQ(records[0].swaps, records[1].swaps);

  std::stringstream csv;
  write_bench_csv(csv, records);
  std::string header;
  std::getline(std::stringstream(csv.str()), header);
  EXPECT_EQ(header, "shape,shift,workers,elapsed_ns,swaps,reversals,repetitions");
  const auto parsed = read_bench_csv(csv);
  ASSERT_EQ(parsed.size(), records.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    EXPECT_EQ(parsed[i].shape, records[i].shape);
    EXPECT_EQ(parsed[i].shift, records[i].shift);
    EXPECT_EQ(parsed[i].elapsed_ns, records[i].elapsed_ns);
    EXPECT_EQ(parsed[i].swaps, records[i].swaps);
  }
}

TEST(Bench, CsvRowFormat) {
  BenchRecord r;
  r.shape = TensorShape{10, 20, 5};
  r.shift = {5, 10, 2};
  r.workers = 4;
  r.elapsed_ns = 1234;
  r.swaps = 999;
  r.reversals = 9;
  r.repetitions = 5;
  std::ostringstream out;
  write_bench_csv(out, std::span(&r, 1));
  EXPECT_EQ(out.str(),
            "shape,shift,workers,elapsed_ns,swaps,reversals,repetitions\n"
            "10;20;5,5;10;2,4,1234,999,9,5\n");
  std::istringstream bad("shape,shift\n1,2\n");
  EXPECT_THROW(read_bench_csv(bad), FormatError);
}

}  // namespace
}  // namespace rotnd
