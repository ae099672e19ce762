#pragma once
// Fuzzy composition: weight vectors against membership matrices, level by
// level. The weighted-average operator is the ordinary vector-matrix product
// and the default; max-min is the classic M(min, max) alternative.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fce/index_tree.hpp"
#include "fce/membership.hpp"
#include "fce/weights.hpp"

namespace fce {

enum class CompositionOp { WeightedAverage, MaxMin };

const char* to_string(CompositionOp op);
std::optional<CompositionOp> composition_op_from_string(std::string_view text);

// Membership distribution over the comment labels for one subject (a group
// id, or "root" for the whole tree).
struct EvaluationVector {
  std::string subject_id;
  std::vector<double> values;
  // Max-min does not preserve normalization, so its output is rescaled to
  // sum 1 and the untouched vector is kept here. Empty for weighted-average.
  std::vector<double> raw_values;

  bool operator==(const EvaluationVector&) const = default;
};

// weighted-average: values[j] = sum_k weights[k] * entries[k][j]
// max-min:          values[j] = max_k min(weights[k], entries[k][j]), rescaled
// Member order is checked against row order by id, not position; any
// mismatch throws ComputeError.
EvaluationVector compose(const WeightVector& weights, const MembershipMatrix& matrix,
                         CompositionOp op);

struct TreeEvaluation {
  std::map<std::string, EvaluationVector> group_vectors;  // empty for depth-1 trees
  EvaluationVector overall;
};

// Composes each leaf group, stacks the results in root-child order, and
// composes the root weights over the stack. Depth-1 trees compose the root
// matrix directly. Throws ComputeError on missing group data.
TreeEvaluation evaluate_tree(const IndexTree& tree,
                             const std::map<std::string, WeightVector>& weights,
                             const std::map<std::string, MembershipMatrix>& matrices,
                             CompositionOp op);

}  // namespace fce
