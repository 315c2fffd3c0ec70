#include "rotnd/parallel.hpp"

#include <omp.h>

namespace rotnd {

Slice even_slice(std::size_t total, std::size_t parts, std::size_t part) noexcept {
  const std::size_t base = total / parts;
  const std::size_t extra = total % parts;
  const std::size_t first = part * base + std::min(part, extra);
  return {first, first + base + (part < extra ? 1 : 0)};
}

std::vector<PairRange> partition_pairs(const Region& region, std::size_t workers) {
  require_workers(workers);
  if (!region.valid()) throw BoundsError("region " + region.to_string() + " is not valid");
  const std::size_t total = region.pair_count();
  const std::size_t parts = std::min(workers, total);
  std::vector<PairRange> ranges;
  ranges.reserve(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    const Slice s = even_slice(total, parts, p);
    ranges.push_back({s.first, s.last, region});
  }
  return ranges;
}

std::size_t default_workers() noexcept {
  const int n = omp_get_max_threads();
  return n > 0 ? static_cast<std::size_t>(n) : 1;
}

std::size_t effective_workers(std::size_t requested, std::size_t elements) noexcept {
  return std::max<std::size_t>(1, std::min(requested, elements / 2));
}

void require_workers(std::size_t workers) {
  if (workers == 0) throw ContractError("worker count must be at least 1");
}

}  // namespace rotnd
