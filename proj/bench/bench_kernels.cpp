// Serial reference vs. sequential vs. OpenMP kernels.

#include <benchmark/benchmark.h>

#include "rotnd/bench.hpp"
#include "rotnd/parallel.hpp"
#include "rotnd/reversal.hpp"
#include "rotnd/rotation.hpp"

namespace {

using rotnd::TensorBuffer;

TensorBuffer<double> make(std::int64_t elements) {
  return TensorBuffer<double>(rotnd::near_cubic_shape(static_cast<std::size_t>(elements), 3));
}

// Inner sub-region, so no flat fast path applies.
rotnd::Region inner(const rotnd::TensorShape& s) {
  rotnd::Region r{rotnd::IndexVector(s.rank()), rotnd::IndexVector(s.rank())};
  for (std::size_t l = 0; l < s.rank(); ++l) {
    r.start[l] = s[l] / 8;
    r.end[l] = s[l] - 1 - s[l] / 8;
  }
  return r;
}

void set_bytes(benchmark::State& state, std::uint64_t elements) {
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * elements * sizeof(double)));
}

void BM_ReverseReference(benchmark::State& state) {
  auto t = make(state.range(0));
  const auto r = inner(t.shape());
  for (auto _ : state) benchmark::DoNotOptimize(rotnd::reverse_region_reference(t, r).swaps);
  set_bytes(state, r.element_count());
}

void BM_ReverseSequential(benchmark::State& state) {
  auto t = make(state.range(0));
  const auto r = inner(t.shape());
  for (auto _ : state) {
    rotnd::reverse_region(t, r);
    benchmark::ClobberMemory();
  }
  set_bytes(state, r.element_count());
}

void BM_ReverseParallel(benchmark::State& state) {
  auto t = make(state.range(0));
  const auto r = inner(t.shape());
  const auto workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    rotnd::reverse_region_parallel(t, r, workers);
    benchmark::ClobberMemory();
  }
  set_bytes(state, r.element_count());
}

void BM_RotateSequential(benchmark::State& state) {
  auto t = make(state.range(0));
  const auto k = rotnd::mid_shift(t.shape());
  for (auto _ : state) {
    rotnd::rotate_in_place(t, k);
    benchmark::ClobberMemory();
  }
  set_bytes(state, t.size());
}

void BM_RotateParallel(benchmark::State& state) {
  auto t = make(state.range(0));
  const auto k = rotnd::mid_shift(t.shape());
  const auto workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    rotnd::rotate_in_place_parallel(t, k, workers);
    benchmark::ClobberMemory();
  }
  set_bytes(state, t.size());
}

}  // namespace

BENCHMARK(BM_ReverseReference)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReverseSequential)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReverseParallel)->ArgsProduct({{1 << 20, 1 << 23}, {1, 2, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RotateSequential)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RotateParallel)->ArgsProduct({{1 << 20, 1 << 23}, {1, 2, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
