#pragma once
// Maximum-membership decision rule plus the auxiliary weighted score.

#include <map>
#include <string>
#include <vector>

#include "fce/comment_set.hpp"
#include "fce/compose.hpp"

namespace fce {

inline constexpr double kDefaultTieEpsilon = 1e-9;

struct Verdict {
  std::string winning_label;
  double winning_value = 0.0;
  // Labels whose entry is within tie_epsilon of the max, winner included,
  // in grade order.
  std::vector<std::string> tied_labels;
  // Auxiliary diagnostic: dot product of the final vector with the grade
  // values. It summarizes the distribution shape but never overrides the
  // maximum-membership rule.
  double weighted_score = 0.0;
  std::map<std::string, EvaluationVector> per_group;

  bool operator==(const Verdict&) const = default;
};

// Winner = label of the maximal entry; an exact tie goes to the better
// grade (labels are ordered best first). Throws ComputeError on a length
// mismatch or a negative epsilon.
Verdict decide(const EvaluationVector& overall, const CommentSet& comment_set,
               double tie_epsilon = kDefaultTieEpsilon);

}  // namespace fce
