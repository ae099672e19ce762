#include "fce/verdict.hpp"

#include <string>

#include "fce/error.hpp"

namespace fce {

Verdict decide(const EvaluationVector& overall, const CommentSet& comment_set,
               double tie_epsilon) {
  if (overall.values.size() != comment_set.size()) {
    throw ComputeError("evaluation vector has " + std::to_string(overall.values.size()) +
                       " entries for " + std::to_string(comment_set.size()) + " comments");
  }
  if (overall.values.empty()) {
    throw ComputeError("evaluation vector is empty");
  }
  if (tie_epsilon < 0.0) {
    throw ComputeError("tie epsilon must be non-negative");
  }

  // Labels run best grade first, so on an exact tie the earlier (better)
  // label wins.
  std::size_t winner = 0;
  for (std::size_t j = 1; j < overall.values.size(); ++j) {
    if (overall.values[j] > overall.values[winner]) winner = j;
  }

  Verdict verdict;
  verdict.winning_label = comment_set.labels[winner];
  verdict.winning_value = overall.values[winner];
  for (std::size_t j = 0; j < overall.values.size(); ++j) {
    if (overall.values[j] >= verdict.winning_value - tie_epsilon) {
      verdict.tied_labels.push_back(comment_set.labels[j]);
    }
  }
  for (std::size_t j = 0; j < overall.values.size(); ++j) {
    verdict.weighted_score += overall.values[j] * comment_set.grades[j];
  }
  return verdict;
}

}  // namespace fce
