#include "fce/validation.hpp"

#include <algorithm>

#include "fce/error.hpp"

namespace fce {

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::CommentSetMismatch: return "comment-set-mismatch";
    case ViolationCode::CommentSetTooSmall: return "comment-set-too-small";
    case ViolationCode::GradesNotDecreasing: return "grades-not-decreasing";
    case ViolationCode::DuplicateLabel: return "duplicate-label";
    case ViolationCode::EmptyLabel: return "empty-label";
    case ViolationCode::DuplicateId: return "duplicate-id";
    case ViolationCode::EmptyId: return "empty-id";
    case ViolationCode::EmptyName: return "empty-name";
    case ViolationCode::SingleChildGroup: return "single-child-group";
    case ViolationCode::EmptyTree: return "empty-tree";
    case ViolationCode::MixedLeafDepth: return "mixed-leaf-depth";
    case ViolationCode::UnsupportedDepth: return "unsupported-depth";
    case ViolationCode::MissingMember: return "missing-member";
    case ViolationCode::ExtraMember: return "extra-member";
    case ViolationCode::ScoreOutOfRange: return "score-out-of-range";
    case ViolationCode::BudgetSum: return "budget-sum";
    case ViolationCode::UnknownLabel: return "unknown-label";
    case ViolationCode::MissingComment: return "missing-comment";
    case ViolationCode::ExtraComment: return "extra-comment";
  }
  return "unknown";
}

std::string to_line(const Violation& v) {
  std::string line = to_string(v.code);
  line += ' ';
  line += v.subject;
  line += ": ";
  line += v.detail;
  return line;
}

void ValidationReport::add(ViolationCode code, std::string subject, std::string detail) {
  violations.push_back({code, std::move(subject), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::size_t ValidationReport::count(ViolationCode code) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [code](const Violation& v) { return v.code == code; }));
}

std::string ValidationReport::summary() const {
  if (ok()) return "no violations";
  std::string text = std::to_string(violations.size());
  text += violations.size() == 1 ? " violation" : " violations";
  text += "; first: ";
  text += to_line(violations.front());
  return text;
}

ValidationError::ValidationError(const std::string& context, ValidationReport report)
    : Error(context + ": " + report.summary()), report_(std::move(report)) {}

}  // namespace fce
