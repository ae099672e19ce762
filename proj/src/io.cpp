#include "fce/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "json_text.hpp"

namespace fce {

namespace {

using nlohmann::ordered_json;

std::string location(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

// Lines of the file, final newline optional, CRLF tolerated. Blank lines are
// structure errors, not separators.
std::vector<std::string> split_lines(const std::filesystem::path& path,
                                     const std::string& content) {
  std::vector<std::string> lines;
  std::string current;
  for (const char c : content) {
    if (c == '\n') {
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto& line = lines[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw ParseError(location(path, i + 1) + ": blank line");
  }
  return lines;
}

std::vector<std::string> split_fields(const std::filesystem::path& path, std::size_t line_no,
                                      const std::string& line, std::size_t expected) {
  std::vector<std::string> fields;
  std::string current;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  if (fields.size() != expected) {
    throw ParseError(location(path, line_no) + ": expected " + std::to_string(expected) +
                     " fields, got " + std::to_string(fields.size()));
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].empty()) {
      throw ParseError(location(path, line_no) + ": field " + std::to_string(i + 1) +
                       " is empty");
    }
  }
  return fields;
}

double parse_score(const std::filesystem::path& path, std::size_t line_no,
                   const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError(location(path, line_no) + ": score '" + text + "' is not a finite number");
  }
  return value;
}

void check_header(const std::filesystem::path& path, const std::vector<std::string>& lines,
                  const std::string& expected) {
  if (lines.empty()) {
    throw ParseError(path.string() + ": empty file, expected header '" + expected + "'");
  }
  if (lines.front() != expected) {
    throw ParseError(location(path, 1) + ": expected header '" + expected + "', got '" +
                     lines.front() + "'");
  }
}

// --- index file ---------------------------------------------------------

std::string require_string(const ordered_json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
  if (!it->is_string()) throw ParseError(where + ": '" + key + "' must be a string");
  return it->get<std::string>();
}

IndexNode node_from_json(const ordered_json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": index entries must be objects");
  IndexNode node;
  node.id = require_string(j, "id", where);
  node.name = require_string(j, "name", where);
  if (const auto it = j.find("explanation"); it != j.end()) {
    if (!it->is_string()) throw ParseError(where + ": 'explanation' must be a string");
    node.explanation = it->get<std::string>();
  }
  if (const auto it = j.find("children"); it != j.end()) {
    if (!it->is_array()) throw ParseError(where + ": 'children' must be an array");
    for (const auto& child : *it) {
      node.children.push_back(node_from_json(child, where + "/" + node.id));
    }
  }
  return node;
}

IndexTree tree_from_json(const ordered_json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": top level must be an object");
  IndexTree tree;
  tree.name = require_string(j, "name", where);

  const auto cs = j.find("comment_set");
  if (cs == j.end()) throw ParseError(where + ": missing key 'comment_set'");
  if (!cs->is_object()) throw ParseError(where + ": 'comment_set' must be an object");
  const auto labels = cs->find("labels");
  const auto grades = cs->find("grades");
  if (labels == cs->end() || !labels->is_array()) {
    throw ParseError(where + ": 'comment_set.labels' must be an array");
  }
  if (grades == cs->end() || !grades->is_array()) {
    throw ParseError(where + ": 'comment_set.grades' must be an array");
  }
  for (const auto& label : *labels) {
    if (!label.is_string()) throw ParseError(where + ": comment labels must be strings");
    tree.comment_set.labels.push_back(label.get<std::string>());
  }
  for (const auto& grade : *grades) {
    if (!grade.is_number()) throw ParseError(where + ": comment grades must be numbers");
    tree.comment_set.grades.push_back(grade.get<double>());
  }

  const auto indexes = j.find("indexes");
  if (indexes == j.end()) throw ParseError(where + ": missing key 'indexes'");
  if (!indexes->is_array()) throw ParseError(where + ": 'indexes' must be an array");
  for (const auto& node : *indexes) {
    tree.root.children.push_back(node_from_json(node, where));
  }
  return tree;
}

ordered_json node_to_json(const IndexNode& node) {
  ordered_json j;
  j["id"] = node.id;
  j["name"] = node.name;
  if (!node.explanation.empty()) j["explanation"] = node.explanation;
  if (!node.children.empty()) {
    auto& children = j["children"] = ordered_json::array();
    for (const auto& child : node.children) children.push_back(node_to_json(child));
  }
  return j;
}

// --- delimited tables ----------------------------------------------------

constexpr const char* kSheetHeader = "consultant_id,group_id,index_id,score";
constexpr const char* kBallotHeader = "consultant_id,index_id,label";

std::vector<WeightSheet> sheets_from_text(const std::filesystem::path& path,
                                          const std::string& content) {
  const auto lines = split_lines(path, content);
  check_header(path, lines, kSheetHeader);
  std::vector<WeightSheet> sheets;
  std::map<std::string, std::size_t> order;  // consultant -> first appearance
  std::set<std::string> seen_rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_fields(path, i + 1, lines[i], 4);
    const double score = parse_score(path, i + 1, fields[3]);
    const std::string key = fields[0] + '\0' + fields[1] + '\0' + fields[2];
    if (!seen_rows.insert(key).second) {
      throw ParseError(location(path, i + 1) + ": duplicate row for consultant '" + fields[0] +
                       "', group '" + fields[1] + "', index '" + fields[2] + "'");
    }
    const auto [it, fresh] = order.emplace(fields[0], sheets.size());
    if (fresh) sheets.push_back(WeightSheet{fields[0], {}});
    sheets[it->second].group_scores[fields[1]][fields[2]] = score;
  }
  return sheets;
}

std::vector<FeedbackBallot> ballots_from_text(const std::filesystem::path& path,
                                              const std::string& content) {
  const auto lines = split_lines(path, content);
  check_header(path, lines, kBallotHeader);
  std::vector<FeedbackBallot> ballots;
  std::map<std::string, std::size_t> order;
  std::set<std::string> seen_rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_fields(path, i + 1, lines[i], 3);
    const std::string key = fields[0] + '\0' + fields[1];
    if (!seen_rows.insert(key).second) {
      throw ParseError(location(path, i + 1) + ": duplicate row for consultant '" + fields[0] +
                       "', index '" + fields[1] + "'");
    }
    const auto [it, fresh] = order.emplace(fields[0], ballots.size());
    if (fresh) ballots.push_back(FeedbackBallot{fields[0], {}});
    ballots[it->second].comments[fields[1]] = fields[2];
  }
  return ballots;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw ParseError("cannot read file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream stream(path, std::ios::binary | std::ios::trunc);
  if (!stream) throw Error("cannot write file '" + path.string() + "'");
  stream.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!stream) throw Error("short write to '" + path.string() + "'");
}

IndexTree parse_tree_file_raw(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  try {
    return tree_from_json(ordered_json::parse(content), path.string());
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

IndexTree parse_tree_file(const std::filesystem::path& path) {
  IndexTree tree = parse_tree_file_raw(path);
  if (auto report = validate_tree(tree); !report.ok()) {
    throw ValidationError(path.string(), std::move(report));
  }
  return tree;
}

std::vector<WeightSheet> parse_weight_sheets_raw(const std::filesystem::path& path) {
  return sheets_from_text(path, read_file(path));
}

std::vector<WeightSheet> parse_weight_sheets(const std::filesystem::path& path,
                                             const IndexTree& tree) {
  auto sheets = parse_weight_sheets_raw(path);
  if (auto report = validate_sheets(sheets, tree); !report.ok()) {
    throw ValidationError(path.string(), std::move(report));
  }
  return sheets;
}

std::vector<FeedbackBallot> parse_ballots_raw(const std::filesystem::path& path) {
  return ballots_from_text(path, read_file(path));
}

std::vector<FeedbackBallot> parse_ballots(const std::filesystem::path& path,
                                          const IndexTree& tree) {
  auto ballots = parse_ballots_raw(path);
  if (auto report = validate_ballots(ballots, tree); !report.ok()) {
    throw ValidationError(path.string(), std::move(report));
  }
  return ballots;
}

ValidationReport validate_sheets(const std::vector<WeightSheet>& sheets, const IndexTree& tree) {
  ValidationReport report;
  for (const auto& sheet : sheets) report.merge(validate_sheet(sheet, tree));
  return report;
}

ValidationReport validate_ballots(const std::vector<FeedbackBallot>& ballots,
                                  const IndexTree& tree) {
  ValidationReport report;
  for (const auto& ballot : ballots) report.merge(validate_ballot(ballot, tree));
  return report;
}

std::string render_tree_file(const IndexTree& tree) {
  ordered_json j;
  j["name"] = tree.name;
  j["comment_set"]["labels"] = tree.comment_set.labels;
  j["comment_set"]["grades"] = tree.comment_set.grades;
  auto& indexes = j["indexes"] = ordered_json::array();
  for (const auto& child : tree.root.children) indexes.push_back(node_to_json(child));
  return j.dump(2) + "\n";
}

std::string render_weight_sheets(const std::vector<WeightSheet>& sheets) {
  std::string out = std::string(kSheetHeader) + "\n";
  for (const auto& sheet : sheets) {
    for (const auto& [group_id, scores] : sheet.group_scores) {
      for (const auto& [member_id, score] : scores) {
        out += sheet.consultant_id + "," + group_id + "," + member_id + "," +
               detail::format_full(score) + "\n";
      }
    }
  }
  return out;
}

std::string render_ballots(const std::vector<FeedbackBallot>& ballots) {
  std::string out = std::string(kBallotHeader) + "\n";
  for (const auto& ballot : ballots) {
    for (const auto& [index_id, label] : ballot.comments) {
      out += ballot.consultant_id + "," + index_id + "," + label + "\n";
    }
  }
  return out;
}

PipelineResult run_pipeline(const ProjectBundle& bundle) {
  const std::string tree_bytes = read_file(bundle.tree_file);
  const std::string sheet_bytes = read_file(bundle.weight_sheets_file);
  const std::string ballot_bytes = read_file(bundle.ballots_file);

  IndexTree tree;
  try {
    tree = tree_from_json(ordered_json::parse(tree_bytes), bundle.tree_file.string());
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(bundle.tree_file.string() + ": " + e.what());
  }
  if (auto report = validate_tree(tree); !report.ok()) {
    throw ValidationError(bundle.tree_file.string(), std::move(report));
  }

  const auto sheets = sheets_from_text(bundle.weight_sheets_file, sheet_bytes);
  if (auto report = validate_sheets(sheets, tree); !report.ok()) {
    throw ValidationError(bundle.weight_sheets_file.string(), std::move(report));
  }
  const auto ballots = ballots_from_text(bundle.ballots_file, ballot_bytes);
  if (auto report = validate_ballots(ballots, tree); !report.ok()) {
    throw ValidationError(bundle.ballots_file.string(), std::move(report));
  }

  const auto selected_sheets = select_valid(sheets, bundle.weights_policy);
  const auto weights = aggregate_weights(selected_sheets, tree);

  const auto ballot_indices = select_indices(ballots.size(), bundle.ballots_policy);
  const auto tallies = tally_ballots(ballots, tree, bundle.ballots_policy);
  std::map<std::string, MembershipMatrix> matrices;
  for (const auto& group_id : leaf_group_ids(tree)) {
    matrices.emplace(group_id, build_matrix(group_id, tallies, tree));
  }

  const auto evaluation = evaluate_tree(tree, weights, matrices, bundle.op);
  Verdict verdict = decide(evaluation.overall, tree.comment_set, bundle.tie_epsilon);
  verdict.per_group = evaluation.group_vectors;

  RunProvenance provenance;
  provenance.tree_input = {bundle.tree_file.string(), fnv1a64_hex(tree_bytes)};
  provenance.sheets_input = {bundle.weight_sheets_file.string(), fnv1a64_hex(sheet_bytes)};
  provenance.ballots_input = {bundle.ballots_file.string(), fnv1a64_hex(ballot_bytes)};
  provenance.weights_policy = bundle.weights_policy;
  provenance.ballots_policy = bundle.ballots_policy;
  for (const auto& sheet : selected_sheets) {
    provenance.weight_consultants.push_back(sheet.consultant_id);
  }
  for (const auto i : ballot_indices) {
    provenance.ballot_consultants.push_back(ballots[i].consultant_id);
  }
  provenance.submitted_sheets = static_cast<int>(sheets.size());
  provenance.submitted_ballots = static_cast<int>(ballots.size());
  provenance.valid_ballots = static_cast<int>(ballot_indices.size());
  provenance.op = bundle.op;
  provenance.tie_epsilon = bundle.tie_epsilon;

  PipelineResult result;
  result.report = build_report(tree, weights, matrices, evaluation, verdict, provenance);
  result.verdict = std::move(verdict);
  return result;
}

}  // namespace fce
