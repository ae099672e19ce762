#pragma once
// File formats and the end-to-end pipeline.
//
// Index file: one JSON document holding the comment set and the index tree.
//   { "name": ..., "comment_set": {"labels": [...], "grades": [...]},
//     "indexes": [ {"id", "name", "explanation"?, "children"?: [...]  } ] }
//
// Weight sheets: delimited table, header row required, no quoting.
//   consultant_id,group_id,index_id,score
//
// Ballots: delimited table, header row required, no quoting.
//   consultant_id,index_id,label
//
// Consultants are ordered by first appearance in the file; that order is
// what a random-k policy samples over.

#include <filesystem>
#include <string>
#include <vector>

#include "fce/compose.hpp"
#include "fce/error.hpp"
#include "fce/index_tree.hpp"
#include "fce/membership.hpp"
#include "fce/policy.hpp"
#include "fce/report.hpp"
#include "fce/verdict.hpp"
#include "fce/weights.hpp"

namespace fce {

struct ProjectBundle {
  std::filesystem::path tree_file;
  std::filesystem::path weight_sheets_file;
  std::filesystem::path ballots_file;
  ValidSubsetPolicy weights_policy;
  ValidSubsetPolicy ballots_policy;
  CompositionOp op = CompositionOp::WeightedAverage;
  double tie_epsilon = kDefaultTieEpsilon;
};

// Strict parsers: syntax problems raise ParseError with line/field location,
// invariant violations raise ValidationError carrying the full report.
IndexTree parse_tree_file(const std::filesystem::path& path);
std::vector<WeightSheet> parse_weight_sheets(const std::filesystem::path& path,
                                             const IndexTree& tree);
std::vector<FeedbackBallot> parse_ballots(const std::filesystem::path& path,
                                          const IndexTree& tree);

// Syntax-only variants for the validate subcommand, which wants every
// violation listed rather than the first one thrown.
IndexTree parse_tree_file_raw(const std::filesystem::path& path);
std::vector<WeightSheet> parse_weight_sheets_raw(const std::filesystem::path& path);
std::vector<FeedbackBallot> parse_ballots_raw(const std::filesystem::path& path);

// Aggregate per-consultant validation with consultant ids in the subjects.
ValidationReport validate_sheets(const std::vector<WeightSheet>& sheets, const IndexTree& tree);
ValidationReport validate_ballots(const std::vector<FeedbackBallot>& ballots,
                                  const IndexTree& tree);

// Renderers; parse(render(x)) == x for any valid x.
std::string render_tree_file(const IndexTree& tree);
std::string render_weight_sheets(const std::vector<WeightSheet>& sheets);
std::string render_ballots(const std::vector<FeedbackBallot>& ballots);

struct PipelineResult {
  Verdict verdict;
  ReportDocument report;
};

// validate -> select/aggregate weights -> tally/build matrices -> evaluate
// -> decide -> report. Fails fast: errors propagate before any output
// exists, tagged with the pipeline stage.
PipelineResult run_pipeline(const ProjectBundle& bundle);

std::string read_file(const std::filesystem::path& path);  // ParseError when unreadable
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace fce
