#pragma once
// Weight elicitation: raw multi-consultant score sheets in, averaged and
// normalized weight vectors out.

#include <map>
#include <string>
#include <vector>

#include "fce/index_tree.hpp"
#include "fce/policy.hpp"
#include "fce/validation.hpp"

namespace fce {

// Each consultant distributes this budget among a group's members.
inline constexpr double kGroupBudget = 10.0;
inline constexpr double kBudgetTolerance = 1e-9;

// One consultant's raw scores, keyed by group id, then member id.
struct WeightSheet {
  std::string consultant_id;
  std::map<std::string, std::map<std::string, double>> group_scores;

  bool operator==(const WeightSheet&) const = default;
};

// Averaged and normalized weights for one group. Member order matches
// members_of(tree, group_id); normalized[k] = averages[k] / sum(averages).
struct WeightVector {
  std::string group_id;
  std::vector<std::string> member_ids;
  std::vector<double> averages;
  std::vector<double> normalized;

  bool operator==(const WeightVector&) const = default;
};

// Per-group checks against the tree: missing member, extra member, score
// outside [0, budget], group sum off the budget by more than the tolerance.
ValidationReport validate_sheet(const WeightSheet& sheet, const IndexTree& tree);

// Mean of the raw scores per member over the given sheets, then normalized
// per group. Permuting the sheets leaves the result bit-identical. Throws
// ComputeError on an empty sheet list or a sheet not covering the tree.
std::map<std::string, WeightVector> aggregate_weights(const std::vector<WeightSheet>& valid_sheets,
                                                      const IndexTree& tree);

}  // namespace fce
