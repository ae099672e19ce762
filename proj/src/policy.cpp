#include "fce/policy.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "fce/error.hpp"

namespace fce {

namespace {

// Unbiased draw in [0, n). std::uniform_int_distribution is not portable
// across standard libraries, so rejection-sample the engine directly.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace

std::vector<std::size_t> select_indices(std::size_t count, const ValidSubsetPolicy& policy) {
  std::vector<std::size_t> indices(count);
  for (std::size_t i = 0; i < count; ++i) indices[i] = i;
  if (policy.mode == SubsetMode::All) return indices;

  if (policy.k == 0) {
    throw ComputeError("subset policy requests 0 submissions");
  }
  if (policy.k > count) {
    throw ComputeError("subset policy requests " + std::to_string(policy.k) +
                       " submissions but only " + std::to_string(count) + " were received");
  }
  std::mt19937_64 rng(policy.seed);
  for (std::size_t i = 0; i < policy.k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(rng, count - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(policy.k);
  std::sort(indices.begin(), indices.end());  // keep submission order
  return indices;
}

}  // namespace fce
