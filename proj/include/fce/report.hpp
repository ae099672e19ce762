#pragma once
// Evaluation reports. The structured form is an audit artifact: it embeds
// input digests, policies, seeds, and every intermediate vector, and its
// byte layout is deterministic for identical inputs. Numbers are serialized
// with 17 significant digits so parsing one back loses nothing.

#include <string>
#include <string_view>
#include <vector>

#include "fce/compose.hpp"
#include "fce/membership.hpp"
#include "fce/policy.hpp"
#include "fce/verdict.hpp"
#include "fce/weights.hpp"

namespace fce {

struct InputFile {
  std::string path;
  std::string fnv1a64;  // hex digest of the file bytes

  bool operator==(const InputFile&) const = default;
};

// Everything needed to trace a verdict back to its exact inputs.
struct RunProvenance {
  InputFile tree_input;
  InputFile sheets_input;
  InputFile ballots_input;
  ValidSubsetPolicy weights_policy;
  ValidSubsetPolicy ballots_policy;
  std::vector<std::string> weight_consultants;  // selected, input order
  std::vector<std::string> ballot_consultants;
  int submitted_sheets = 0;
  int submitted_ballots = 0;
  int valid_ballots = 0;  // n
  CompositionOp op = CompositionOp::WeightedAverage;
  double tie_epsilon = kDefaultTieEpsilon;

  bool operator==(const RunProvenance&) const = default;
};

struct ReportDocument {
  std::string dataset;
  RunProvenance provenance;
  CommentSet comment_set;
  std::vector<WeightVector> weights;          // root first, then tree order
  std::vector<MembershipMatrix> memberships;  // leaf groups in tree order
  std::vector<EvaluationVector> group_vectors;
  EvaluationVector overall;
  Verdict verdict;  // per_group left empty; group_vectors carries the data

  bool operator==(const ReportDocument&) const = default;
};

ReportDocument build_report(const IndexTree& tree,
                            const std::map<std::string, WeightVector>& weights,
                            const std::map<std::string, MembershipMatrix>& matrices,
                            const TreeEvaluation& evaluation, const Verdict& verdict,
                            const RunProvenance& provenance);

// Human-readable text: provenance, per-group vectors, final vector, verdict,
// ties, weighted score.
std::string render_text(const ReportDocument& doc);

// Machine-readable JSON with fixed key order; byte-identical across runs
// with identical inputs.
std::string to_json(const ReportDocument& doc);

// Throws ParseError on malformed or incomplete documents.
ReportDocument report_from_json(const std::string& text);

// Weight table with one column per selected consultant plus the averaged
// and normalized columns.
std::string render_weight_table(const IndexTree& tree, const std::vector<WeightSheet>& sheets,
                                const std::map<std::string, WeightVector>& weights);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace fce
