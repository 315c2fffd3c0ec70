#include "rotnd/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "rotnd/bench.hpp"
#include "rotnd/generate.hpp"
#include "rotnd/parallel.hpp"
#include "rotnd/reversal.hpp"
#include "rotnd/rotation.hpp"
#include "rotnd/tensor_io.hpp"
#include "rotnd/verify.hpp"

namespace rotnd::cli {

namespace {

void require_rank(std::size_t got, const TensorShape& shape, const char* what) {
  if (got != shape.rank()) {
    throw ShapeError(std::string(what) + " has " + std::to_string(got) +
                     " components but the tensor has rank " + std::to_string(shape.rank()));
  }
}

struct RotateArgs {
  std::string input;
  std::string output;
  std::vector<std::int64_t> shift;
  std::size_t workers = 1;
};

struct ReverseArgs {
  std::string input;
  std::string output;
  std::vector<std::size_t> start;
  std::vector<std::size_t> end;
  std::size_t workers = 1;
};

struct GenArgs {
  std::vector<std::size_t> shape;
  std::string dtype = "f64";
  std::string fill = "iota";
  std::uint64_t seed = 0;
  std::string output;
};

struct BenchArgs {
  std::vector<std::size_t> elems;
  std::size_t dims = 3;
  std::vector<std::size_t> workers{1};
  std::size_t reps = 5;
  std::string csv;
  std::string dtype = "f64";
};

int do_rotate(const RotateArgs& a, std::ostream& out) {
  require_workers(a.workers);
  AnyTensor tensor = read_tensor(a.input);
  require_rank(a.shift.size(), shape_of(tensor), "--shift");
  std::visit(
      [&](auto& t) {
        if (a.workers == 1) {
          rotate_in_place(t, a.shift);
        } else {
          rotate_in_place_parallel(t, a.shift, a.workers);
        }
      },
      tensor);
  write_tensor(a.output, tensor);
  out << "rotated " << shape_of(tensor).to_string() << " by " << format_shift(a.shift) << '\n';
  return kExitOk;
}

int do_reverse(const ReverseArgs& a, std::ostream& out) {
  require_workers(a.workers);
  AnyTensor tensor = read_tensor(a.input);
  const TensorShape& shape = shape_of(tensor);
  if (shape.empty()) {
    write_tensor(a.output, tensor);
    return kExitOk;
  }
  Region region = Region::whole(shape);
  if (!a.start.empty()) {
    require_rank(a.start.size(), shape, "--start");
    region.start = a.start;
  }
  if (!a.end.empty()) {
    require_rank(a.end.size(), shape, "--end");
    region.end = a.end;
  }
  std::visit(
      [&](auto& t) {
        if (a.workers == 1) {
          reverse_region(t, region);
        } else {
          reverse_region_parallel(t, region, a.workers);
        }
      },
      tensor);
  write_tensor(a.output, tensor);
  out << "reversed region " << region.to_string() << '\n';
  return kExitOk;
}

int do_gen(const GenArgs& a, std::ostream& out) {
  AnyTensor tensor = make_tensor(parse_dtype(a.dtype), TensorShape(a.shape));
  if (a.fill == "iota") {
    fill_iota(tensor);
  } else if (a.fill == "random") {
    Rng rng(a.seed);
    fill_random(tensor, rng);
  } else {
    throw ContractError("--fill must be iota or random");
  }
  write_tensor(a.output, tensor);
  out << "wrote " << dtype_name(dtype_of(tensor)) << ' ' << shape_of(tensor).to_string() << " to "
      << a.output << '\n';
  return kExitOk;
}

int do_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig config{a.elems, a.dims, a.workers, a.reps, parse_dtype(a.dtype)};
  validate(config);
  std::ofstream csv(a.csv, std::ios::trunc);
  if (!csv) throw IoError("cannot open '" + a.csv + "' for writing");
  const std::vector<BenchRecord> records = run_bench(config, &out);
  write_bench_csv(csv, records);
  csv.flush();
  if (!csv) throw IoError("error while writing '" + a.csv + "'");
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"In-place cyclic shift of N-dimensional tensors", "rotnd"};
  app.require_subcommand(1);

  std::function<int()> action;

  RotateArgs rot;
  auto* rotate = app.add_subcommand("rotate", "Cyclically shift a tensor file");
  rotate->add_option("--input", rot.input, "Input tensor file")->required();
  rotate->add_option("--output", rot.output, "Output tensor file")->required();
  rotate->add_option("--shift", rot.shift, "Shift per dimension, comma separated")
      ->required()
      ->delimiter(',')
      ->allow_extra_args(false);
  rotate->add_option("--workers", rot.workers, "Worker threads (1 = sequential)")
      ->default_val(default_workers());
  rotate->callback([&] { action = [&] { return do_rotate(rot, out); }; });

  ReverseArgs rev;
  auto* reverse = app.add_subcommand("reverse", "Reverse a tensor file (or a region of it)");
  reverse->add_option("--input", rev.input, "Input tensor file")->required();
  reverse->add_option("--output", rev.output, "Output tensor file")->required();
  reverse->add_option("--start", rev.start, "Inclusive region start")->delimiter(',');
  reverse->add_option("--end", rev.end, "Inclusive region end")->delimiter(',');
  reverse->add_option("--workers", rev.workers, "Worker threads (1 = sequential)")
      ->default_val(default_workers());
  reverse->callback([&] { action = [&] { return do_reverse(rev, out); }; });

  VerifyConfig ver;
  auto* verify = app.add_subcommand("verify", "Check in-place rotation against the copy-based oracle");
  verify->add_option("--trials", ver.trials, "Number of randomized trials")->required();
  verify->add_option("--max-dims", ver.max_dims, "Largest rank, 1..8")->required();
  verify->add_option("--max-elems", ver.max_elems, "Largest element count")->required();
  verify->add_option("--seed", ver.seed, "Generator seed")->required();
  verify->add_option("--workers", ver.workers, "Also check the parallel rotation when > 1")
      ->default_val(1);
  verify->callback([&] { action = [&] { return run_verify(ver, out); }; });

  BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "Time rotations and write one CSV row per cell");
  bench->add_option("--elems", ben.elems, "Approximate element counts")->required()->delimiter(',');
  bench->add_option("--dims", ben.dims, "Tensor rank")->required();
  bench->add_option("--workers", ben.workers, "Worker counts")->required()->delimiter(',');
  bench->add_option("--reps", ben.reps, "Timed repetitions per cell (>= 3)")->default_val(5);
  bench->add_option("--csv", ben.csv, "CSV output path")->required();
  bench->add_option("--dtype", ben.dtype, "Element type: f64, i64 or u8")->default_val("f64");
  bench->callback([&] { action = [&] { return do_bench(ben, out); }; });

  GenArgs gen;
  auto* generate = app.add_subcommand("gen", "Write a generated tensor file");
  generate->add_option("--shape", gen.shape, "Extents, comma separated")->required()->delimiter(',');
  generate->add_option("--dtype", gen.dtype, "Element type: f64, i64 or u8")->default_val("f64");
  generate->add_option("--fill", gen.fill, "iota or random")->required();
  generate->add_option("--seed", gen.seed, "Seed for --fill random")->default_val(0);
  generate->add_option("--output", gen.output, "Output tensor file")->required();
  generate->callback([&] { action = [&] { return do_gen(gen, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return action ? action() : kExitInvalid;
  } catch (const IoError& e) {
    err << "rotnd: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "rotnd: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace rotnd::cli
