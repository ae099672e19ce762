#include "fce/compose.hpp"

#include <algorithm>
#include <string>

#include "fce/error.hpp"

namespace fce {

const char* to_string(CompositionOp op) {
  switch (op) {
    case CompositionOp::WeightedAverage:
      return "weighted-average";
    case CompositionOp::MaxMin:
      return "max-min";
  }
  return "unknown";
}

std::optional<CompositionOp> composition_op_from_string(std::string_view text) {
  if (text == "weighted-average") return CompositionOp::WeightedAverage;
  if (text == "max-min") return CompositionOp::MaxMin;
  return std::nullopt;
}

EvaluationVector compose(const WeightVector& weights, const MembershipMatrix& matrix,
                         CompositionOp op) {
  if (weights.member_ids != matrix.row_ids) {
    throw ComputeError("weight members and matrix rows disagree for group '" + weights.group_id +
                       "'");
  }
  if (weights.normalized.size() != matrix.entries.size() || matrix.entries.empty()) {
    throw ComputeError("weight count and row count disagree for group '" + weights.group_id + "'");
  }
  const std::size_t columns = matrix.entries.front().size();
  for (const auto& row : matrix.entries) {
    if (row.size() != columns) {
      throw ComputeError("ragged membership matrix for group '" + matrix.group_id + "'");
    }
  }

  EvaluationVector result;
  result.subject_id = weights.group_id;
  result.values.assign(columns, 0.0);
  if (op == CompositionOp::WeightedAverage) {
    for (std::size_t k = 0; k < matrix.entries.size(); ++k) {
      for (std::size_t j = 0; j < columns; ++j) {
        result.values[j] += weights.normalized[k] * matrix.entries[k][j];
      }
    }
    return result;
  }

  for (std::size_t k = 0; k < matrix.entries.size(); ++k) {
    for (std::size_t j = 0; j < columns; ++j) {
      result.values[j] =
          std::max(result.values[j], std::min(weights.normalized[k], matrix.entries[k][j]));
    }
  }
  double sum = 0.0;
  for (const double v : result.values) sum += v;
  if (sum <= 0.0) {
    throw ComputeError("max-min composition collapsed to zero for group '" + weights.group_id +
                       "'");
  }
  result.raw_values = result.values;
  for (double& v : result.values) v /= sum;
  return result;
}

TreeEvaluation evaluate_tree(const IndexTree& tree,
                             const std::map<std::string, WeightVector>& weights,
                             const std::map<std::string, MembershipMatrix>& matrices,
                             CompositionOp op) {
  const auto weight_of = [&](const std::string& group_id) -> const WeightVector& {
    const auto it = weights.find(group_id);
    if (it == weights.end()) {
      throw ComputeError("no weight vector for group '" + group_id + "'");
    }
    return it->second;
  };
  const auto matrix_of = [&](const std::string& group_id) -> const MembershipMatrix& {
    const auto it = matrices.find(group_id);
    if (it == matrices.end()) {
      throw ComputeError("no membership matrix for group '" + group_id + "'");
    }
    return it->second;
  };

  TreeEvaluation evaluation;
  if (leaf_depth(tree) == 1) {
    evaluation.overall = compose(weight_of(tree.root.id), matrix_of(tree.root.id), op);
    return evaluation;
  }

  MembershipMatrix stacked;
  stacked.group_id = tree.root.id;
  for (const auto& group_id : leaf_group_ids(tree)) {
    EvaluationVector vector = compose(weight_of(group_id), matrix_of(group_id), op);
    stacked.row_ids.push_back(group_id);
    stacked.entries.push_back(vector.values);
    evaluation.group_vectors.emplace(group_id, std::move(vector));
  }
  evaluation.overall = compose(weight_of(tree.root.id), stacked, op);
  return evaluation;
}

}  // namespace fce
