#pragma once
// Fixture builders and a self-contained generator for the property suites.
// Everything is seeded; a failing instance reproduces from its seed alone.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fce/index_tree.hpp"
#include "fce/membership.hpp"
#include "fce/weights.hpp"

namespace builders {

class Rand {
 public:
  explicit Rand(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  // Uniform-enough in [lo, hi] for fixture shapes; modulo bias is irrelevant
  // at these ranges.
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(next() % (hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline fce::CommentSet comment_set(std::size_t count) {
  fce::CommentSet cs;
  for (std::size_t j = 0; j < count; ++j) {
    cs.labels.push_back("v" + std::to_string(j + 1));
    cs.grades.push_back(static_cast<double>(count - j));
  }
  return cs;
}

// Two-level tree: groups g1..gN, leaves g<i>x<k>.
inline fce::IndexTree two_level_tree(const std::vector<std::size_t>& leaves_per_group,
                                     std::size_t comment_count) {
  fce::IndexTree tree;
  tree.name = "generated";
  tree.comment_set = comment_set(comment_count);
  for (std::size_t i = 0; i < leaves_per_group.size(); ++i) {
    fce::IndexNode group;
    group.id = "g" + std::to_string(i + 1);
    group.name = "group " + std::to_string(i + 1);
    for (std::size_t k = 0; k < leaves_per_group[i]; ++k) {
      fce::IndexNode leaf;
      leaf.id = group.id + "x" + std::to_string(k + 1);
      leaf.name = group.id + " leaf " + std::to_string(k + 1);
      group.children.push_back(std::move(leaf));
    }
    tree.root.children.push_back(std::move(group));
  }
  return tree;
}

inline fce::IndexTree one_level_tree(std::size_t leaves, std::size_t comment_count) {
  fce::IndexTree tree;
  tree.name = "generated flat";
  tree.comment_set = comment_set(comment_count);
  for (std::size_t k = 0; k < leaves; ++k) {
    fce::IndexNode leaf;
    leaf.id = "x" + std::to_string(k + 1);
    leaf.name = "leaf " + std::to_string(k + 1);
    tree.root.children.push_back(std::move(leaf));
  }
  return tree;
}

inline fce::IndexTree random_tree(Rand& rng, std::size_t min_groups = 2,
                                  std::size_t max_groups = 10, std::size_t min_leaves = 2,
                                  std::size_t max_leaves = 8) {
  std::vector<std::size_t> shape(rng.between(min_groups, max_groups));
  for (auto& leaves : shape) leaves = rng.between(min_leaves, max_leaves);
  return two_level_tree(shape, rng.between(2, 6));
}

// Distributes the group budget in half-point steps, so every sheet sums to
// the budget exactly, not just within tolerance.
inline std::map<std::string, double> random_group_scores(Rand& rng,
                                                         const std::vector<fce::IndexNode>& members) {
  std::map<std::string, double> scores;
  for (const auto& member : members) scores[member.id] = 0.0;
  const int steps = static_cast<int>(fce::kGroupBudget * 2);
  for (int s = 0; s < steps; ++s) {
    const auto& member = members[rng.between(0, members.size() - 1)];
    scores[member.id] += 0.5;
  }
  return scores;
}

inline std::vector<fce::WeightSheet> random_sheets(Rand& rng, const fce::IndexTree& tree,
                                                   std::size_t consultants) {
  std::vector<fce::WeightSheet> sheets;
  for (std::size_t c = 0; c < consultants; ++c) {
    fce::WeightSheet sheet;
    sheet.consultant_id = "c" + std::to_string(c + 1);
    for (const auto& group_id : fce::group_ids(tree)) {
      sheet.group_scores[group_id] = random_group_scores(rng, fce::members_of(tree, group_id));
    }
    sheets.push_back(std::move(sheet));
  }
  return sheets;
}

inline std::vector<fce::FeedbackBallot> random_ballots(Rand& rng, const fce::IndexTree& tree,
                                                       std::size_t consultants) {
  std::vector<fce::FeedbackBallot> ballots;
  const auto leaves = fce::leaf_ids(tree);
  for (std::size_t c = 0; c < consultants; ++c) {
    fce::FeedbackBallot ballot;
    ballot.consultant_id = "c" + std::to_string(c + 1);
    for (const auto& leaf : leaves) {
      ballot.comments[leaf] =
          tree.comment_set.labels[rng.between(0, tree.comment_set.size() - 1)];
    }
    ballots.push_back(std::move(ballot));
  }
  return ballots;
}

// Weight vector straight from random averages, for tests that do not go
// through sheets.
inline fce::WeightVector random_weight_vector(Rand& rng, const std::string& group_id,
                                              const std::vector<std::string>& member_ids) {
  fce::WeightVector vector;
  vector.group_id = group_id;
  vector.member_ids = member_ids;
  double total = 0.0;
  for (std::size_t k = 0; k < member_ids.size(); ++k) {
    vector.averages.push_back(static_cast<double>(rng.between(1, 40)) / 4.0);
    total += vector.averages.back();
  }
  for (const double average : vector.averages) vector.normalized.push_back(average / total);
  return vector;
}

// Membership rows as exact count ratios, like a real tally would produce.
inline fce::MembershipMatrix random_matrix(Rand& rng, const std::string& group_id,
                                           const std::vector<std::string>& row_ids,
                                           std::size_t columns) {
  fce::MembershipMatrix matrix;
  matrix.group_id = group_id;
  matrix.row_ids = row_ids;
  for (std::size_t r = 0; r < row_ids.size(); ++r) {
    const std::size_t n = rng.between(1, 20);
    std::vector<int> counts(columns, 0);
    for (std::size_t s = 0; s < n; ++s) ++counts[rng.between(0, columns - 1)];
    std::vector<double> row;
    for (const int count : counts) {
      row.push_back(static_cast<double>(count) / static_cast<double>(n));
    }
    matrix.entries.push_back(std::move(row));
  }
  return matrix;
}

}  // namespace builders
