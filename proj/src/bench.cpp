#include "rotnd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "rotnd/generate.hpp"
#include "rotnd/instrumentation.hpp"
#include "rotnd/parallel.hpp"
#include "rotnd/rotation.hpp"

namespace rotnd {

namespace {

template <class T>
std::string join(std::span<const T> values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::uint64_t to_u64(const std::string& s) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) throw FormatError("bad integer field '" + s + "'");
  return v;
}

template <class T>
BenchRecord bench_cell(TensorBuffer<T>& tensor, std::span<const std::int64_t> shift,
                       std::size_t workers, std::size_t reps) {
  auto rotate = [&](Instrumentation* stats) {
    if (workers == 1) {
      rotate_in_place(tensor, shift, stats);
    } else {
      rotate_in_place_parallel(tensor, shift, workers, stats);
    }
  };

  // Untimed instrumented pass doubles as warm-up.
  Instrumentation stats;
  rotate(&stats);

  std::vector<std::uint64_t> samples;
  samples.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    rotate(nullptr);
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
  }

  BenchRecord rec;
  rec.shape = tensor.shape();
  rec.shift.assign(shift.begin(), shift.end());
  rec.workers = workers;
  rec.elapsed_ns = median_ns(std::move(samples));
  rec.swaps = stats.swaps;
  rec.reversals = stats.reversals;
  rec.repetitions = reps;
  return rec;
}

}  // namespace

TensorShape near_cubic_shape(std::size_t elements, std::size_t dims) {
  if (dims == 0 || dims > kMaxRank) throw ContractError("bench rank must be in 1..63");
  std::vector<std::size_t> d(dims, 1);
  double remaining = static_cast<double>(std::max<std::size_t>(elements, 1));
  for (std::size_t l = 0; l + 1 < dims; ++l) {
    const double side = std::round(std::pow(remaining, 1.0 / static_cast<double>(dims - l)));
    d[l] = std::max<std::size_t>(1, static_cast<std::size_t>(side));
    remaining /= static_cast<double>(d[l]);
  }
  d[dims - 1] = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(remaining)));
  return TensorShape(std::move(d));
}

ShiftVector mid_shift(const TensorShape& shape) {
  ShiftVector k(shape.rank());
  for (std::size_t l = 0; l < shape.rank(); ++l) k[l] = static_cast<std::int64_t>(shape[l] / 2);
  return k;
}

void validate(const BenchConfig& config) {
  if (config.elems.empty()) throw ContractError("--elems needs at least one size");
  if (std::ranges::any_of(config.elems, [](std::size_t e) { return e == 0; })) {
    throw ContractError("--elems sizes must be positive");
  }
  if (config.dims == 0 || config.dims > kMaxRank) throw ContractError("--dims must be in 1..63");
  if (config.workers.empty()) throw ContractError("--workers needs at least one count");
  if (std::ranges::any_of(config.workers, [](std::size_t w) { return w == 0; })) {
    throw ContractError("--workers counts must be positive");
  }
  if (config.reps < 3) throw ContractError("--reps must be at least 3");
}

std::uint64_t median_ns(std::vector<std::uint64_t> samples) {
  if (samples.empty()) throw ContractError("median of an empty sample");
  const auto mid = samples.begin() + static_cast<std::ptrdiff_t>((samples.size() - 1) / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  return *mid;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* log) {
  validate(config);
  std::vector<BenchRecord> records;
  for (std::size_t target : config.elems) {
    AnyTensor tensor = make_tensor(config.dtype, near_cubic_shape(target, config.dims));
    fill_iota(tensor);
    const ShiftVector shift = mid_shift(shape_of(tensor));
    for (std::size_t w : config.workers) {
      BenchRecord rec = std::visit(
          [&](auto& t) { return bench_cell(t, shift, w, config.reps); }, tensor);
      if (log) {
        *log << "shape=" << rec.shape.to_string() << " workers=" << w
             << " median_ns=" << rec.elapsed_ns << '\n';
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << join<std::size_t>(r.shape.dims(), ';') << ','
        << join<std::int64_t>(r.shift, ';') << ',' << r.workers << ',' << r.elapsed_ns << ','
        << r.swaps << ',' << r.reversals << ',' << r.repetitions << '\n';
  }
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader) {
    throw FormatError("benchmark CSV is missing its header row");
  }
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cols = split(line, ',');
    if (cols.size() != 7) throw FormatError("benchmark CSV row has " + std::to_string(cols.size()) +
                                            " columns: " + line);
    BenchRecord r;
    std::vector<std::size_t> dims;
    for (const auto& s : split(cols[0], ';')) dims.push_back(to_u64(s));
    r.shape = TensorShape(std::move(dims));
    for (const auto& s : split(cols[1], ';')) r.shift.push_back(std::stoll(s));
    r.workers = to_u64(cols[2]);
    r.elapsed_ns = to_u64(cols[3]);
    r.swaps = to_u64(cols[4]);
    r.reversals = to_u64(cols[5]);
    r.repetitions = to_u64(cols[6]);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace rotnd
