#include "fce/index_tree.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fce/error.hpp"

namespace fce {

std::optional<std::size_t> CommentSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

namespace {

void validate_comment_set(const CommentSet& cs, ValidationReport& report) {
  if (cs.labels.size() != cs.grades.size()) {
    report.add(ViolationCode::CommentSetMismatch, "comment-set",
               std::to_string(cs.labels.size()) + " labels vs " +
                   std::to_string(cs.grades.size()) + " grades");
  }
  if (cs.labels.size() < 2) {
    report.add(ViolationCode::CommentSetTooSmall, "comment-set",
               "need at least 2 grades, got " + std::to_string(cs.labels.size()));
  }
  for (std::size_t i = 0; i + 1 < cs.grades.size(); ++i) {
    if (!(cs.grades[i] > cs.grades[i + 1])) {
      report.add(ViolationCode::GradesNotDecreasing, "comment-set",
                 "grade " + std::to_string(i + 1) + " does not decrease");
    }
  }
  std::set<std::string> seen;
  for (const auto& label : cs.labels) {
    if (label.empty()) {
      report.add(ViolationCode::EmptyLabel, "comment-set", "label must not be empty");
    } else if (!seen.insert(label).second) {
      report.add(ViolationCode::DuplicateLabel, label, "label appears more than once");
    }
  }
}

void walk_nodes(const IndexNode& node, int depth, std::set<std::string>& ids,
                std::vector<int>& leaf_depths, ValidationReport& report) {
  const bool is_root = depth == 0;
  if (!is_root) {
    if (node.id.empty()) {
      report.add(ViolationCode::EmptyId, node.name.empty() ? "<unnamed>" : node.name,
                 "index id must not be empty");
    } else if (!ids.insert(node.id).second) {
      report.add(ViolationCode::DuplicateId, node.id, "index id appears more than once");
    }
    if (node.name.empty()) {
      report.add(ViolationCode::EmptyName, node.id, "index name must not be empty");
    }
    if (node.is_leaf()) leaf_depths.push_back(depth);
  }
  if (node.children.size() == 1) {
    // A weight over one member is always 1.0 and usually a data-entry slip.
    report.add(ViolationCode::SingleChildGroup, node.id,
               "group has a single member '" + node.children.front().id + "'");
  }
  for (const auto& child : node.children) {
    walk_nodes(child, depth + 1, ids, leaf_depths, report);
  }
}

}  // namespace

ValidationReport validate_tree(const IndexTree& tree) {
  ValidationReport report;
  validate_comment_set(tree.comment_set, report);
  if (tree.root.children.empty()) {
    report.add(ViolationCode::EmptyTree, tree.root.id, "tree has no indexes");
    return report;
  }
  std::set<std::string> ids{tree.root.id};  // node ids may not shadow the root
  std::vector<int> leaf_depths;
  walk_nodes(tree.root, 0, ids, leaf_depths, report);
  if (!leaf_depths.empty()) {
    const auto [lo, hi] = std::minmax_element(leaf_depths.begin(), leaf_depths.end());
    if (*lo != *hi) {
      report.add(ViolationCode::MixedLeafDepth, tree.root.id,
                 "leaf depths range from " + std::to_string(*lo) + " to " + std::to_string(*hi));
    }
    if (*hi > 2) {
      report.add(ViolationCode::UnsupportedDepth, tree.root.id,
                 "leaves at depth " + std::to_string(*hi) + ", engine supports 1 or 2");
    }
  }
  return report;
}

const IndexNode* find_node(const IndexTree& tree, std::string_view id) {
  const IndexNode* found = nullptr;
  auto visit = [&](const auto& self, const IndexNode& node) -> void {
    if (found) return;
    if (node.id == id) {
      found = &node;
      return;
    }
    for (const auto& child : node.children) self(self, child);
  };
  visit(visit, tree.root);
  return found;
}

const std::vector<IndexNode>& members_of(const IndexTree& tree, std::string_view group_id) {
  const IndexNode* node = find_node(tree, group_id);
  if (node == nullptr) {
    throw ComputeError("unknown index id '" + std::string(group_id) + "'");
  }
  if (node->is_leaf()) {
    throw ComputeError("index '" + std::string(group_id) + "' is a leaf, not a group");
  }
  return node->children;
}

std::vector<std::string> group_ids(const IndexTree& tree) {
  std::vector<std::string> ids;
  auto visit = [&](const auto& self, const IndexNode& node) -> void {
    if (!node.is_leaf()) {
      ids.push_back(node.id);
      for (const auto& child : node.children) self(self, child);
    }
  };
  visit(visit, tree.root);
  return ids;
}

std::vector<std::string> leaf_group_ids(const IndexTree& tree) {
  std::vector<std::string> ids;
  auto visit = [&](const auto& self, const IndexNode& node) -> void {
    if (node.is_leaf()) return;
    const bool all_leaves = std::all_of(node.children.begin(), node.children.end(),
                                        [](const IndexNode& c) { return c.is_leaf(); });
    if (all_leaves) {
      ids.push_back(node.id);
    } else {
      for (const auto& child : node.children) self(self, child);
    }
  };
  visit(visit, tree.root);
  return ids;
}

std::vector<std::string> leaf_ids(const IndexTree& tree) {
  std::vector<std::string> ids;
  auto visit = [&](const auto& self, const IndexNode& node) -> void {
    if (node.is_leaf()) {
      ids.push_back(node.id);
      return;
    }
    for (const auto& child : node.children) self(self, child);
  };
  for (const auto& child : tree.root.children) visit(visit, child);
  return ids;
}

int leaf_depth(const IndexTree& tree) {
  const IndexNode* node = &tree.root;
  int depth = 0;
  while (!node->is_leaf()) {
    node = &node->children.front();
    ++depth;
  }
  return depth;
}

}  // namespace fce
