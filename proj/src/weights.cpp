#include "fce/weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fce/error.hpp"
#include "json_text.hpp"

namespace fce {

namespace {

std::string subject(const std::string& consultant, const std::string& group) {
  return consultant + "/" + group;
}

std::string subject(const std::string& consultant, const std::string& group,
                    const std::string& member) {
  return consultant + "/" + group + "/" + member;
}

// Sorting before accumulating makes the sum independent of input order, so
// shuffling the sheets cannot perturb the last bit of an average.
double ordered_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (const double v : values) sum += v;
  return sum;
}

}  // namespace

ValidationReport validate_sheet(const WeightSheet& sheet, const IndexTree& tree) {
  ValidationReport report;
  for (const auto& group_id : group_ids(tree)) {
    const auto& members = members_of(tree, group_id);
    const auto scores_it = sheet.group_scores.find(group_id);
    if (scores_it == sheet.group_scores.end()) {
      for (const auto& member : members) {
        report.add(ViolationCode::MissingMember, subject(sheet.consultant_id, group_id, member.id),
                   "no score recorded");
      }
      continue;
    }
    const auto& scores = scores_it->second;
    double sum = 0.0;
    bool complete = true;
    for (const auto& member : members) {
      const auto it = scores.find(member.id);
      if (it == scores.end()) {
        report.add(ViolationCode::MissingMember, subject(sheet.consultant_id, group_id, member.id),
                   "no score recorded");
        complete = false;
        continue;
      }
      if (!(it->second >= 0.0) || it->second > kGroupBudget) {
        report.add(ViolationCode::ScoreOutOfRange,
                   subject(sheet.consultant_id, group_id, member.id),
                   "score " + detail::format_short(it->second) + " outside [0, " +
                       detail::format_short(kGroupBudget) + "]");
      }
      sum += it->second;
    }
    for (const auto& [member_id, value] : scores) {
      const bool known = std::any_of(members.begin(), members.end(),
                                     [&](const IndexNode& m) { return m.id == member_id; });
      if (!known) {
        report.add(ViolationCode::ExtraMember, subject(sheet.consultant_id, group_id, member_id),
                   "scored index is not a member of this group");
      }
    }
    if (complete && std::abs(sum - kGroupBudget) > kBudgetTolerance) {
      report.add(ViolationCode::BudgetSum, subject(sheet.consultant_id, group_id),
                 "scores sum to " + detail::format_short(sum) + ", budget is " +
                     detail::format_short(kGroupBudget));
    }
  }
  for (const auto& [group_id, scores] : sheet.group_scores) {
    if (const IndexNode* node = find_node(tree, group_id); node == nullptr || node->is_leaf()) {
      for (const auto& [member_id, value] : scores) {
        report.add(ViolationCode::ExtraMember, subject(sheet.consultant_id, group_id, member_id),
                   "scored group is not in the tree");
      }
    }
  }
  return report;
}

std::map<std::string, WeightVector> aggregate_weights(const std::vector<WeightSheet>& valid_sheets,
                                                      const IndexTree& tree) {
  if (valid_sheets.empty()) {
    throw ComputeError("cannot aggregate weights from zero sheets");
  }
  std::map<std::string, WeightVector> result;
  for (const auto& group_id : group_ids(tree)) {
    const auto& members = members_of(tree, group_id);
    WeightVector vector;
    vector.group_id = group_id;
    for (const auto& member : members) {
      std::vector<double> scores;
      scores.reserve(valid_sheets.size());
      for (const auto& sheet : valid_sheets) {
        const auto group_it = sheet.group_scores.find(group_id);
        if (group_it == sheet.group_scores.end() ||
            group_it->second.find(member.id) == group_it->second.end()) {
          throw ComputeError("sheet from '" + sheet.consultant_id + "' has no score for '" +
                             member.id + "' in group '" + group_id + "'");
        }
        scores.push_back(group_it->second.at(member.id));
      }
      vector.member_ids.push_back(member.id);
      vector.averages.push_back(ordered_sum(std::move(scores)) /
                                static_cast<double>(valid_sheets.size()));
    }
    double total = 0.0;
    for (const double average : vector.averages) total += average;
    if (total <= 0.0) {
      throw ComputeError("group '" + group_id + "' has zero total weight, cannot normalize");
    }
    for (const double average : vector.averages) vector.normalized.push_back(average / total);
    result.emplace(group_id, std::move(vector));
  }
  return result;
}

}  // namespace fce
