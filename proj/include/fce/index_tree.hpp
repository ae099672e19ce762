#pragma once
// The hierarchical index system feedback is collected over. The root is
// synthetic; its children are the primary indexes. Leaves are the unit at
// which ballots are cast. All types are immutable after construction.

#include <string>
#include <string_view>
#include <vector>

#include "fce/comment_set.hpp"
#include "fce/validation.hpp"

namespace fce {

struct IndexNode {
  std::string id;
  std::string name;
  std::string explanation;
  std::vector<IndexNode> children;

  bool is_leaf() const noexcept { return children.empty(); }
  bool operator==(const IndexNode&) const = default;
};

struct IndexTree {
  std::string name;
  IndexNode root{"root", "", "", {}};
  CommentSet comment_set;

  bool operator==(const IndexTree&) const = default;
};

// Structural checks: comment-set well-formedness, unique non-empty ids,
// non-empty names, no single-child groups, uniform leaf depth of 1 or 2.
ValidationReport validate_tree(const IndexTree& tree);

// Members of a group in declaration order. That order defines matrix row
// order everywhere downstream. Throws ComputeError for an unknown id or a
// leaf id.
const std::vector<IndexNode>& members_of(const IndexTree& tree, std::string_view group_id);

// nullptr when absent; "root" finds the synthetic root.
const IndexNode* find_node(const IndexTree& tree, std::string_view id);

// Internal nodes (root first, then pre-order).
std::vector<std::string> group_ids(const IndexTree& tree);

// Groups whose members are leaves; the groups membership matrices exist for.
std::vector<std::string> leaf_group_ids(const IndexTree& tree);

// Every leaf id, group-major in declaration order.
std::vector<std::string> leaf_ids(const IndexTree& tree);

// Uniform depth of the leaves below root (1 or 2 for valid trees).
int leaf_depth(const IndexTree& tree);

}  // namespace fce
