#pragma once
// Violations are data, not exceptions: validators collect every problem they
// find and leave it to the caller to decide whether to abort.

#include <cstddef>
#include <string>
#include <vector>

namespace fce {

enum class ViolationCode {
  // comment set
  CommentSetMismatch,
  CommentSetTooSmall,
  GradesNotDecreasing,
  DuplicateLabel,
  EmptyLabel,
  // index tree
  DuplicateId,
  EmptyId,
  EmptyName,
  SingleChildGroup,
  EmptyTree,
  MixedLeafDepth,
  UnsupportedDepth,
  // weight sheets
  MissingMember,
  ExtraMember,
  ScoreOutOfRange,
  BudgetSum,
  // ballots
  UnknownLabel,
  MissingComment,
  ExtraComment,
};

const char* to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string subject;  // id of the offending node, consultant, or group
  std::string detail;

  bool operator==(const Violation&) const = default;
};

// One printable line: "<code> <subject>: <detail>".
std::string to_line(const Violation& v);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  void add(ViolationCode code, std::string subject, std::string detail);
  void merge(const ValidationReport& other);
  std::size_t count(ViolationCode code) const;
  std::string summary() const;
};

}  // namespace fce
