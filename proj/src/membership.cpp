#include "fce/membership.hpp"

#include <algorithm>
#include <string>

#include "fce/error.hpp"

namespace fce {

ValidationReport validate_ballot(const FeedbackBallot& ballot, const IndexTree& tree) {
  ValidationReport report;
  const auto leaves = leaf_ids(tree);
  for (const auto& leaf : leaves) {
    const auto it = ballot.comments.find(leaf);
    if (it == ballot.comments.end()) {
      report.add(ViolationCode::MissingComment, ballot.consultant_id + "/" + leaf,
                 "leaf index was not graded");
      continue;
    }
    if (!tree.comment_set.index_of(it->second)) {
      report.add(ViolationCode::UnknownLabel, ballot.consultant_id + "/" + leaf,
                 "label '" + it->second + "' is not in the comment set");
    }
  }
  for (const auto& [id, label] : ballot.comments) {
    if (std::find(leaves.begin(), leaves.end(), id) == leaves.end()) {
      report.add(ViolationCode::ExtraComment, ballot.consultant_id + "/" + id,
                 "graded index is not a leaf of the tree");
    }
  }
  return report;
}

std::map<std::string, FeedbackTally> tally_ballots(const std::vector<FeedbackBallot>& ballots,
                                                   const IndexTree& tree,
                                                   const ValidSubsetPolicy& policy) {
  const auto selected = select_valid(ballots, policy);
  if (selected.empty()) {
    throw ComputeError("no ballots to tally");
  }
  const auto leaves = leaf_ids(tree);
  std::map<std::string, FeedbackTally> tallies;
  for (const auto& leaf : leaves) {
    FeedbackTally tally;
    tally.leaf_id = leaf;
    tally.counts.assign(tree.comment_set.size(), 0);
    tallies.emplace(leaf, std::move(tally));
  }
  for (const auto& ballot : selected) {
    for (const auto& leaf : leaves) {
      const auto it = ballot.comments.find(leaf);
      if (it == ballot.comments.end()) {
        throw ComputeError("ballot from '" + ballot.consultant_id + "' does not grade '" + leaf +
                           "'; validate ballots before tallying");
      }
      const auto column = tree.comment_set.index_of(it->second);
      if (!column) {
        throw ComputeError("ballot from '" + ballot.consultant_id + "' grades '" + leaf +
                           "' with unknown label '" + it->second + "'");
      }
      auto& tally = tallies.at(leaf);
      ++tally.counts[*column];
      ++tally.n;
    }
  }
  return tallies;
}

std::vector<double> membership_from_tally(const FeedbackTally& tally) {
  if (tally.n < 1) {
    throw ComputeError("tally for '" + tally.leaf_id + "' covers no ballots");
  }
  int sum = 0;
  for (const int count : tally.counts) sum += count;
  if (sum != tally.n) {
    throw ComputeError("tally for '" + tally.leaf_id + "' counts " + std::to_string(sum) +
                       " grades over " + std::to_string(tally.n) + " ballots");
  }
  std::vector<double> row;
  row.reserve(tally.counts.size());
  for (const int count : tally.counts) {
    row.push_back(static_cast<double>(count) / static_cast<double>(tally.n));
  }
  return row;
}

MembershipMatrix build_matrix(const std::string& group_id,
                              const std::map<std::string, FeedbackTally>& tallies,
                              const IndexTree& tree) {
  MembershipMatrix matrix;
  matrix.group_id = group_id;
  for (const auto& member : members_of(tree, group_id)) {
    const auto it = tallies.find(member.id);
    if (it == tallies.end()) {
      throw ComputeError("no tally for member '" + member.id + "' of group '" + group_id + "'");
    }
    matrix.row_ids.push_back(member.id);
    matrix.entries.push_back(membership_from_tally(it->second));
  }
  return matrix;
}

}  // namespace fce
