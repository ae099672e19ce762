#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fce {

// Ordered grade vocabulary, best grade first. Grades are unitless ordinal
// scores and must be strictly decreasing; labels must be distinct.
struct CommentSet {
  std::vector<std::string> labels;
  std::vector<double> grades;

  std::size_t size() const noexcept { return labels.size(); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const CommentSet&) const = default;
};

}  // namespace fce
