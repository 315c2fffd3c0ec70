#include "rotnd/generate.hpp"

#include <bit>
#include <limits>

namespace rotnd {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());  // full 64-bit range
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + uniform_below(rng, span));
}

std::uint64_t integer_root(std::uint64_t x, unsigned k) {
  if (k <= 1 || x <= 1) return x;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << ((64 + k - 1) / k);
  auto fits = [&](std::uint64_t r) {
    unsigned __int128 p = 1;
    for (unsigned i = 0; i < k; ++i) {
      p *= r;
      if (p > x) return false;
    }
    return true;
  };
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

void fill_iota(AnyTensor& tensor) {
  std::visit([](auto& t) { fill_iota(t); }, tensor);
}

void fill_random(AnyTensor& tensor, Rng& rng) {
  std::visit(
      [&](auto& t) {
        using T = typename std::decay_t<decltype(t)>::value_type;
        for (T& x : t.data()) {
          const std::uint64_t bits = rng();
          if constexpr (std::is_same_v<T, double>) {
            x = static_cast<double>(bits >> 11) * 0x1p-53;
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            x = std::bit_cast<std::int64_t>(bits);
          } else {
            x = static_cast<T>(bits >> 56);
          }
        }
      },
      tensor);
}

}  // namespace rotnd
