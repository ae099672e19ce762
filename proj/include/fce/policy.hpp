#pragma once
// Valid-subset selection: which submitted sheets/ballots are admitted into
// computation. RandomK replicates protocols that keep a seeded random subset
// of the responses instead of all of them.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fce {

enum class SubsetMode { All, RandomK };

struct ValidSubsetPolicy {
  SubsetMode mode = SubsetMode::All;
  std::size_t k = 0;       // subset size when mode == RandomK
  std::uint64_t seed = 0;  // sampling is deterministic for a fixed seed

  static ValidSubsetPolicy all() { return {}; }
  static ValidSubsetPolicy random_k(std::size_t k, std::uint64_t seed) {
    return {SubsetMode::RandomK, k, seed};
  }

  bool operator==(const ValidSubsetPolicy&) const = default;
};

// k distinct positions in [0, count), ascending so selection preserves input
// order. Throws ComputeError when k is 0 or exceeds count.
std::vector<std::size_t> select_indices(std::size_t count, const ValidSubsetPolicy& policy);

template <typename T>
std::vector<T> select_valid(const std::vector<T>& items, const ValidSubsetPolicy& policy) {
  const auto indices = select_indices(items.size(), policy);
  std::vector<T> chosen;
  chosen.reserve(indices.size());
  for (const auto i : indices) chosen.push_back(items[i]);
  return chosen;
}

}  // namespace fce
