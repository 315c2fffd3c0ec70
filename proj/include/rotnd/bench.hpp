#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "rotnd/tensor_core.hpp"
#include "rotnd/tensor_io.hpp"

namespace rotnd {

struct BenchConfig {
  std::vector<std::size_t> elems;
  std::size_t dims = 3;
  std::vector<std::size_t> workers{1};
  std::size_t reps = 5;
  DType dtype = DType::F64;
};

/// One (size, workers) cell. elapsed_ns is the median over `repetitions`.
struct BenchRecord {
  TensorShape shape{1};
  ShiftVector shift;
  std::size_t workers = 1;
  std::uint64_t elapsed_ns = 0;
  std::uint64_t swaps = 0;
  std::uint64_t reversals = 0;
  std::size_t repetitions = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "shape,shift,workers,elapsed_ns,swaps,reversals,repetitions";

/// Extents as close to equal as possible whose product approximates `elements`.
TensorShape near_cubic_shape(std::size_t elements, std::size_t dims);

/// k_l = floor(d_l / 2): every block is non-empty whenever d_l >= 2.
ShiftVector mid_shift(const TensorShape& shape);

/// Throws ContractError for an unusable configuration.
void validate(const BenchConfig& config);

/// Times rotate_in_place (workers == 1) or rotate_in_place_parallel for every
/// (size, workers) cell. Progress lines go to `log` when given.
std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* log = nullptr);

/// Median of a non-empty sample (lower median for even sizes).
std::uint64_t median_ns(std::vector<std::uint64_t> samples);

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);
/// Parses what write_bench_csv produced; throws FormatError on malformed rows.
std::vector<BenchRecord> read_bench_csv(std::istream& in);

}  // namespace rotnd
