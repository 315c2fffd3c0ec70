#include <gtest/gtest.h>

#include "rotnd/parallel.hpp"
#include "rotnd/reversal.hpp"
#include "rotnd/rotation.hpp"
#include "support/cases.hpp"

namespace rotnd {
namespace {

using testing::iota_tensor;
using testing::random_region;
using testing::random_shape;
using testing::random_shift;
using testing::random_tensor;

std::vector<std::size_t> sizes(const std::vector<PairRange>& ranges) {
  std::vector<std::size_t> out;
  for (const auto& r : ranges) out.push_back(r.size());
  return out;
}

TEST(PartitionPairs, Examples) {
  const Region r35{{0, 0}, {4, 6}};
  const auto ranges = partition_pairs(r35, 4);
  EXPECT_EQ(sizes(ranges), (std::vector<std::size_t>{5, 4, 4, 4}));
  EXPECT_EQ(ranges.front().start_pair, 0u);
  EXPECT_EQ(ranges.back().end_pair, 17u);

  EXPECT_TRUE(partition_pairs(Region{{3}, {3}}, 8).empty());

  const auto single = partition_pairs(Region{{0}, {9}}, 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].start_pair, 0u);
  EXPECT_EQ(single[0].end_pair, 5u);

  EXPECT_THROW(partition_pairs(r35, 0), ContractError);
}

TEST(PartitionPairs, CoverageAndBalance) {
  Rng rng(30);
  for (int trial = 0; trial < 500; ++trial) {
    const TensorShape shape = random_shape(rng, 4, 5000);
    const Region region = random_region(rng, shape);
    const std::size_t workers = 1 + uniform_below(rng, 40);
    const auto ranges = partition_pairs(region, workers);
    const std::size_t total = region.pair_count();
    ASSERT_EQ(ranges.size(), std::min(workers, total));
    std::size_t next = 0;
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& r : ranges) {
      ASSERT_EQ(r.start_pair, next);
      ASSERT_GT(r.size(), 0u);
      next = r.end_pair;
      lo = std::min(lo, r.size());
      hi = std::max(hi, r.size());
    }
    ASSERT_EQ(next, total);
    if (!ranges.empty()) ASSERT_LE(hi - lo, 1u);
  }
}

TEST(ReverseRegionParallel, MatchesSequential) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const TensorShape shape = random_shape(rng, 6, 50000);
    const Region region = random_region(rng, shape);
    const auto original = random_tensor(rng, shape);
    auto expected = original;
    reverse_region(expected, region);
    for (std::size_t w : {1, 2, 3, 4, 8}) {
      auto t = original;
      Instrumentation stats;
      reverse_region_parallel(t, region, w, &stats);
      ASSERT_EQ(t, expected) << "workers=" << w;
      ASSERT_EQ(stats.swaps, region.pair_count());
    }
  }
}

TEST(ReverseRegionParallel, GlobalReversalWithFourWorkers) {
  auto m = iota_tensor({5, 7}, 1);
  reverse_region_parallel(m, Region::whole(m.shape()), 4);
  std::vector<std::int64_t> expected(35);
  for (std::size_t e = 0; e < 35; ++e) expected[e] = static_cast<std::int64_t>(35 - e);
  EXPECT_EQ(m, TensorBuffer<std::int64_t>(TensorShape{5, 7}, expected));
}

TEST(ReverseRegionParallel, RejectsBadInputAtomically) {
  auto t = iota_tensor({4, 4});
  const auto before = t;
  EXPECT_THROW(reverse_region_parallel(t, Region{{0, 0}, {4, 0}}, 2), BoundsError);
  EXPECT_THROW(reverse_region_parallel(t, Region::whole(t.shape()), 0), ContractError);
  EXPECT_EQ(t, before);
}

TEST(RotateInPlaceParallel, Examples) {
  auto c = iota_tensor({7}, 1);
  rotate_in_place_parallel(c, {3}, 2);
  EXPECT_EQ(c, TensorBuffer<std::int64_t>(TensorShape{7}, {5, 6, 7, 1, 2, 3, 4}));

  auto z = iota_tensor({4, 5, 6});
  const auto before = z;
  for (std::size_t w : {1, 3, 16}) {
    rotate_in_place_parallel(z, {0, 0, 0}, w);
    EXPECT_EQ(z, before);
  }

  TensorBuffer<std::int64_t> empty(TensorShape{0, 3});
  EXPECT_NO_THROW(rotate_in_place_parallel(empty, {1, 1}, 4));
  EXPECT_THROW(rotate_in_place_parallel(z, {1, 1}, 4), ShapeError);
}

TEST(RotateInPlaceParallel, DeterministicAcrossWorkerCounts) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const TensorShape shape = random_shape(rng, 6, 50000);
    const ShiftVector k = random_shift(rng, shape);
    const auto original = random_tensor(rng, shape);
    auto expected = original;
    Instrumentation seq;
    rotate_in_place(expected, k, &seq);
    for (std::size_t w : {1, 2, 4, 8}) {
      auto t = original;
      Instrumentation par;
      rotate_in_place_parallel(t, k, w, &par);
      ASSERT_EQ(t, expected) << shape.to_string() << " workers=" << w;
      // Same reversals with the same per-reversal swap counts; total work conserved.
      ASSERT_EQ(par.reversals, seq.reversals);
      ASSERT_EQ(par.swaps, seq.swaps);
      ASSERT_EQ(par.log.size(), seq.log.size());
      for (std::size_t r = 0; r < par.log.size(); ++r) {
        ASSERT_EQ(par.log[r].region, seq.log[r].region);
        ASSERT_EQ(par.log[r].swaps, seq.log[r].swaps);
      }
      ASSERT_EQ(par.stage1_pairs, shape.element_count() / 2);
      ASSERT_LE(par.stage2_pairs, shape.element_count() / 2);
      ASSERT_EQ(par.worker_state_bytes, 4 * shape.rank() * sizeof(std::size_t));
    }
  }
}

TEST(RotateInPlaceParallel, WorkersCappedAtPairCount) {
  auto t = iota_tensor({3});
  Instrumentation stats;
  rotate_in_place_parallel(t, {1}, 64, &stats);
  EXPECT_EQ(t, TensorBuffer<std::int64_t>(TensorShape{3}, {2, 0, 1}));
  EXPECT_EQ(stats.workers, 1u);
  EXPECT_EQ(effective_workers(8, 100), 8u);
  EXPECT_EQ(effective_workers(8, 1), 1u);
}

TEST(EvenSlice, SizesDifferByAtMostOne) {
  std::size_t next = 0;
  for (std::size_t p = 0; p < 4; ++p) {
    const Slice s = even_slice(17, 4, p);
    EXPECT_EQ(s.first, next);
    EXPECT_EQ(s.last - s.first, p == 0 ? 5u : 4u);
    next = s.last;
  }
}

}  // namespace
}  // namespace rotnd
