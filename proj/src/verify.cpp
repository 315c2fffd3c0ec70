#include "rotnd/verify.hpp"

#include <ostream>

#include "rotnd/oracle.hpp"
#include "rotnd/parallel.hpp"
#include "rotnd/rotation.hpp"

namespace rotnd {

namespace {

// Prints the mismatch and returns false, or returns true when equal.
bool report_match(std::ostream& out, const char* label, const TensorBuffer<std::int64_t>& expected,
                  const TensorBuffer<std::int64_t>& actual) {
  const auto diff = first_difference(expected, actual);
  if (!diff) return true;
  out << "  " << label << " mismatch at " << format_index(*diff)
      << ": expected " << expected.at(*diff) << ", actual " << actual.at(*diff) << '\n';
  return false;
}

}  // namespace

Trial make_trial(Rng& rng, std::size_t max_dims, std::size_t max_elems) {
  const std::size_t rank = 1 + uniform_below(rng, max_dims);
  std::vector<std::size_t> dims(rank);
  std::uint64_t budget = max_elems;
  for (std::size_t l = 0; l < rank; ++l) {
    const auto left = static_cast<unsigned>(rank - l);
    const std::uint64_t cap = std::min<std::uint64_t>(budget, 2 * integer_root(budget, left));
    dims[l] = 1 + uniform_below(rng, std::max<std::uint64_t>(cap, 1));
    budget /= dims[l];
  }
  TensorShape shape(std::move(dims));

  ShiftVector shift(rank);
  for (std::size_t l = 0; l < rank; ++l) {
    const auto d = static_cast<std::int64_t>(shape[l]);
    shift[l] = uniform_between(rng, -2 * d, 2 * d);
  }

  AnyTensor contents = make_tensor(DType::I64, shape);
  fill_random(contents, rng);
  return {std::get<TensorBuffer<std::int64_t>>(std::move(contents)), std::move(shift)};
}

void validate(const VerifyConfig& config) {
  if (config.trials < 1) throw ContractError("--trials must be at least 1");
  if (config.max_dims < 1 || config.max_dims > 8) throw ContractError("--max-dims must be in 1..8");
  if (config.max_elems < 1) throw ContractError("--max-elems must be at least 1");
  if (config.workers < 1) throw ContractError("--workers must be at least 1");
}

int run_verify(const VerifyConfig& config, std::ostream& out, const RotateFn& rotate) {
  validate(config);
  const RotateFn& sequential =
      rotate ? rotate : RotateFn([](TensorBuffer<std::int64_t>& t, std::span<const std::int64_t> k) {
        rotate_in_place(t, k);
      });

  Rng rng(config.seed);
  std::size_t passed = 0;
  for (std::size_t n = 1; n <= config.trials; ++n) {
    const Trial trial = make_trial(rng, config.max_dims, config.max_elems);
    const TensorBuffer<std::int64_t> expected = oracle_rotate(trial.input, trial.shift);

    out << "trial " << n << '/' << config.trials << " shape=" << trial.input.shape().to_string()
        << " shift=" << format_shift(trial.shift);

    TensorBuffer<std::int64_t> seq = trial.input;
    sequential(seq, trial.shift);
    const bool seq_ok = expected == seq;
    bool par_ok = true;
    TensorBuffer<std::int64_t> par = trial.input;
    if (config.workers > 1) {
      rotate_in_place_parallel(par, trial.shift, config.workers);
      par_ok = expected == par;
    }
    out << (seq_ok && par_ok ? " PASS" : " FAIL") << '\n';
    if (!seq_ok) report_match(out, "sequential", expected, seq);
    if (!par_ok) report_match(out, "parallel", expected, par);
    if (seq_ok && par_ok) ++passed;
  }
  out << "summary: " << passed << '/' << config.trials << " trials passed (seed " << config.seed
      << ", max-dims " << config.max_dims << ", max-elems " << config.max_elems << ", workers "
      << config.workers << ")\n";
  return passed == config.trials ? 0 : 1;
}

}  // namespace rotnd
