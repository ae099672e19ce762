#pragma once
// Membership determination: graded ballots in, row-stochastic membership
// matrices out. Tallies hold integer counts so the ratio counts[j] / n stays
// exact by construction.

#include <map>
#include <string>
#include <vector>

#include "fce/index_tree.hpp"
#include "fce/policy.hpp"
#include "fce/validation.hpp"

namespace fce {

// One consultant's grading of every leaf, keyed by leaf id.
struct FeedbackBallot {
  std::string consultant_id;
  std::map<std::string, std::string> comments;

  bool operator==(const FeedbackBallot&) const = default;
};

// Grade counts for one leaf over the valid ballots; counts[j] ballots picked
// comment label j, and the counts sum to n.
struct FeedbackTally {
  std::string leaf_id;
  std::vector<int> counts;
  int n = 0;

  bool operator==(const FeedbackTally&) const = default;
};

// One row per member leaf (in members_of order), one column per comment
// label. Every row sums to 1.
struct MembershipMatrix {
  std::string group_id;
  std::vector<std::string> row_ids;
  std::vector<std::vector<double>> entries;

  bool operator==(const MembershipMatrix&) const = default;
};

// A ballot must grade every leaf exactly once with a known label; partial
// ballots would make n leaf-dependent and are rejected.
ValidationReport validate_ballot(const FeedbackBallot& ballot, const IndexTree& tree);

// Selects the valid subset per policy, then counts grades per leaf. n is the
// subset size and identical for every leaf. Throws ComputeError on an empty
// ballot list, a bad policy, or a ballot that breaks the completeness
// precondition.
std::map<std::string, FeedbackTally> tally_ballots(const std::vector<FeedbackBallot>& ballots,
                                                   const IndexTree& tree,
                                                   const ValidSubsetPolicy& policy);

// Entry j = counts[j] / n. Throws ComputeError when n < 1 or the counts do
// not sum to n.
std::vector<double> membership_from_tally(const FeedbackTally& tally);

// Stacks the group's member tallies into a matrix, rows in members_of order.
// Throws ComputeError when a member's tally is missing.
MembershipMatrix build_matrix(const std::string& group_id,
                              const std::map<std::string, FeedbackTally>& tallies,
                              const IndexTree& tree);

}  // namespace fce
