#include "fce/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>

#include <json.hpp>

#include "fce/error.hpp"
#include "json_text.hpp"

namespace fce {

namespace {

using detail::format_full;
using detail::format_short;
using detail::json_escape;

std::string quote(std::string_view text) { return "\"" + json_escape(text) + "\""; }

std::string string_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += quote(items[i]);
  }
  out += "]";
  return out;
}

std::string number_array(const std::vector<double>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_full(items[i]);
  }
  out += "]";
  return out;
}

std::string policy_json(const ValidSubsetPolicy& policy) {
  std::string out = "{\"mode\": ";
  out += policy.mode == SubsetMode::All ? quote("all") : quote("random-k");
  out += ", \"k\": " + std::to_string(policy.k);
  out += ", \"seed\": " + std::to_string(policy.seed);
  out += "}";
  return out;
}

std::string input_json(const InputFile& input) {
  return "{\"path\": " + quote(input.path) + ", \"fnv1a64\": " + quote(input.fnv1a64) + "}";
}

void append_vector_json(std::string& out, const EvaluationVector& vector,
                        const std::string& indent) {
  out += indent + "{\n";
  out += indent + "  \"subject_id\": " + quote(vector.subject_id) + ",\n";
  out += indent + "  \"values\": " + number_array(vector.values) + ",\n";
  out += indent + "  \"raw_values\": " + number_array(vector.raw_values) + "\n";
  out += indent + "}";
}

std::string policy_text(const ValidSubsetPolicy& policy, std::size_t used,
                        std::size_t submitted) {
  std::string out = policy.mode == SubsetMode::All
                        ? "all"
                        : "random:" + std::to_string(policy.k) +
                              " seed=" + std::to_string(policy.seed);
  out += " (" + std::to_string(used) + "/" + std::to_string(submitted) + ")";
  return out;
}

std::string fixed6(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

std::string pad(std::string text, std::size_t width) {
  while (text.size() < width) text += ' ';
  return text;
}

ValidSubsetPolicy policy_from_json(const nlohmann::json& j) {
  ValidSubsetPolicy policy;
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "all") {
    policy.mode = SubsetMode::All;
  } else if (mode == "random-k") {
    policy.mode = SubsetMode::RandomK;
  } else {
    throw ParseError("report: unknown policy mode '" + mode + "'");
  }
  policy.k = j.at("k").get<std::size_t>();
  policy.seed = j.at("seed").get<std::uint64_t>();
  return policy;
}

InputFile input_from_json(const nlohmann::json& j) {
  return {j.at("path").get<std::string>(), j.at("fnv1a64").get<std::string>()};
}

EvaluationVector vector_from_json(const nlohmann::json& j) {
  EvaluationVector vector;
  vector.subject_id = j.at("subject_id").get<std::string>();
  vector.values = j.at("values").get<std::vector<double>>();
  vector.raw_values = j.at("raw_values").get<std::vector<double>>();
  return vector;
}

}  // namespace

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

ReportDocument build_report(const IndexTree& tree,
                            const std::map<std::string, WeightVector>& weights,
                            const std::map<std::string, MembershipMatrix>& matrices,
                            const TreeEvaluation& evaluation, const Verdict& verdict,
                            const RunProvenance& provenance) {
  ReportDocument doc;
  doc.dataset = tree.name;
  doc.provenance = provenance;
  doc.comment_set = tree.comment_set;
  for (const auto& group_id : group_ids(tree)) {
    const auto it = weights.find(group_id);
    if (it == weights.end()) {
      throw ComputeError("no weight vector for group '" + group_id + "'");
    }
    doc.weights.push_back(it->second);
  }
  for (const auto& group_id : leaf_group_ids(tree)) {
    const auto it = matrices.find(group_id);
    if (it == matrices.end()) {
      throw ComputeError("no membership matrix for group '" + group_id + "'");
    }
    doc.memberships.push_back(it->second);
    const auto vector_it = evaluation.group_vectors.find(group_id);
    if (vector_it != evaluation.group_vectors.end()) {
      doc.group_vectors.push_back(vector_it->second);
    }
  }
  doc.overall = evaluation.overall;
  doc.verdict = verdict;
  doc.verdict.per_group.clear();
  return doc;
}

std::string to_json(const ReportDocument& doc) {
  std::string out = "{\n";
  out += "  \"dataset\": " + quote(doc.dataset) + ",\n";

  const auto& p = doc.provenance;
  out += "  \"provenance\": {\n";
  out += "    \"tree_input\": " + input_json(p.tree_input) + ",\n";
  out += "    \"sheets_input\": " + input_json(p.sheets_input) + ",\n";
  out += "    \"ballots_input\": " + input_json(p.ballots_input) + ",\n";
  out += "    \"weights_policy\": " + policy_json(p.weights_policy) + ",\n";
  out += "    \"ballots_policy\": " + policy_json(p.ballots_policy) + ",\n";
  out += "    \"weight_consultants\": " + string_array(p.weight_consultants) + ",\n";
  out += "    \"ballot_consultants\": " + string_array(p.ballot_consultants) + ",\n";
  out += "    \"submitted_sheets\": " + std::to_string(p.submitted_sheets) + ",\n";
  out += "    \"submitted_ballots\": " + std::to_string(p.submitted_ballots) + ",\n";
  out += "    \"valid_ballots\": " + std::to_string(p.valid_ballots) + ",\n";
  out += "    \"operator\": " + quote(to_string(p.op)) + ",\n";
  out += "    \"tie_epsilon\": " + format_full(p.tie_epsilon) + "\n";
  out += "  },\n";

  out += "  \"comment_set\": {\"labels\": " + string_array(doc.comment_set.labels) +
         ", \"grades\": " + number_array(doc.comment_set.grades) + "},\n";

  out += "  \"weights\": [\n";
  for (std::size_t i = 0; i < doc.weights.size(); ++i) {
    const auto& w = doc.weights[i];
    out += "    {\n";
    out += "      \"group_id\": " + quote(w.group_id) + ",\n";
    out += "      \"member_ids\": " + string_array(w.member_ids) + ",\n";
    out += "      \"averages\": " + number_array(w.averages) + ",\n";
    out += "      \"normalized\": " + number_array(w.normalized) + "\n";
    out += i + 1 < doc.weights.size() ? "    },\n" : "    }\n";
  }
  out += "  ],\n";

  out += "  \"memberships\": [\n";
  for (std::size_t i = 0; i < doc.memberships.size(); ++i) {
    const auto& m = doc.memberships[i];
    out += "    {\n";
    out += "      \"group_id\": " + quote(m.group_id) + ",\n";
    out += "      \"row_ids\": " + string_array(m.row_ids) + ",\n";
    out += "      \"entries\": [\n";
    for (std::size_t r = 0; r < m.entries.size(); ++r) {
      out += "        " + number_array(m.entries[r]);
      out += r + 1 < m.entries.size() ? ",\n" : "\n";
    }
    out += "      ]\n";
    out += i + 1 < doc.memberships.size() ? "    },\n" : "    }\n";
  }
  out += "  ],\n";

  out += "  \"group_vectors\": [";
  if (!doc.group_vectors.empty()) {
    out += "\n";
    for (std::size_t i = 0; i < doc.group_vectors.size(); ++i) {
      append_vector_json(out, doc.group_vectors[i], "    ");
      out += i + 1 < doc.group_vectors.size() ? ",\n" : "\n";
    }
    out += "  ";
  }
  out += "],\n";

  out += "  \"overall\":\n";
  append_vector_json(out, doc.overall, "    ");
  out += ",\n";

  const auto& v = doc.verdict;
  out += "  \"verdict\": {\n";
  out += "    \"winning_label\": " + quote(v.winning_label) + ",\n";
  out += "    \"winning_value\": " + format_full(v.winning_value) + ",\n";
  out += "    \"tied_labels\": " + string_array(v.tied_labels) + ",\n";
  out += "    \"weighted_score\": " + format_full(v.weighted_score) + "\n";
  out += "  }\n";
  out += "}\n";
  return out;
}

ReportDocument report_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ReportDocument doc;
    doc.dataset = j.at("dataset").get<std::string>();

    const auto& p = j.at("provenance");
    doc.provenance.tree_input = input_from_json(p.at("tree_input"));
    doc.provenance.sheets_input = input_from_json(p.at("sheets_input"));
    doc.provenance.ballots_input = input_from_json(p.at("ballots_input"));
    doc.provenance.weights_policy = policy_from_json(p.at("weights_policy"));
    doc.provenance.ballots_policy = policy_from_json(p.at("ballots_policy"));
    doc.provenance.weight_consultants = p.at("weight_consultants").get<std::vector<std::string>>();
    doc.provenance.ballot_consultants = p.at("ballot_consultants").get<std::vector<std::string>>();
    doc.provenance.submitted_sheets = p.at("submitted_sheets").get<int>();
    doc.provenance.submitted_ballots = p.at("submitted_ballots").get<int>();
    doc.provenance.valid_ballots = p.at("valid_ballots").get<int>();
    const auto op = composition_op_from_string(p.at("operator").get<std::string>());
    if (!op) {
      throw ParseError("report: unknown operator '" + p.at("operator").get<std::string>() + "'");
    }
    doc.provenance.op = *op;
    doc.provenance.tie_epsilon = p.at("tie_epsilon").get<double>();

    doc.comment_set.labels = j.at("comment_set").at("labels").get<std::vector<std::string>>();
    doc.comment_set.grades = j.at("comment_set").at("grades").get<std::vector<double>>();

    for (const auto& w : j.at("weights")) {
      WeightVector weight;
      weight.group_id = w.at("group_id").get<std::string>();
      weight.member_ids = w.at("member_ids").get<std::vector<std::string>>();
      weight.averages = w.at("averages").get<std::vector<double>>();
      weight.normalized = w.at("normalized").get<std::vector<double>>();
      doc.weights.push_back(std::move(weight));
    }
    for (const auto& m : j.at("memberships")) {
      MembershipMatrix matrix;
      matrix.group_id = m.at("group_id").get<std::string>();
      matrix.row_ids = m.at("row_ids").get<std::vector<std::string>>();
      matrix.entries = m.at("entries").get<std::vector<std::vector<double>>>();
      doc.memberships.push_back(std::move(matrix));
    }
    for (const auto& g : j.at("group_vectors")) {
      doc.group_vectors.push_back(vector_from_json(g));
    }
    doc.overall = vector_from_json(j.at("overall"));

    const auto& v = j.at("verdict");
    doc.verdict.winning_label = v.at("winning_label").get<std::string>();
    doc.verdict.winning_value = v.at("winning_value").get<double>();
    doc.verdict.tied_labels = v.at("tied_labels").get<std::vector<std::string>>();
    doc.verdict.weighted_score = v.at("weighted_score").get<double>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string render_text(const ReportDocument& doc) {
  const auto& p = doc.provenance;
  std::string out;
  out += "Dataset: " + doc.dataset + "\n";
  out += "Inputs:\n";
  out += "  tree    " + p.tree_input.path + " (fnv1a64 " + p.tree_input.fnv1a64 + ")\n";
  out += "  sheets  " + p.sheets_input.path + " (fnv1a64 " + p.sheets_input.fnv1a64 + ")\n";
  out += "  ballots " + p.ballots_input.path + " (fnv1a64 " + p.ballots_input.fnv1a64 + ")\n";
  out += "Run: operator=" + std::string(to_string(p.op));
  out += ", sheets=" +
         policy_text(p.weights_policy, p.weight_consultants.size(),
                     static_cast<std::size_t>(p.submitted_sheets));
  out += ", ballots=" +
         policy_text(p.ballots_policy, p.ballot_consultants.size(),
                     static_cast<std::size_t>(p.submitted_ballots));
  out += ", tie-epsilon=" + format_short(p.tie_epsilon) + "\n";
  out += "Comments:";
  for (std::size_t j = 0; j < doc.comment_set.size(); ++j) {
    out += " " + doc.comment_set.labels[j] + "(" + format_short(doc.comment_set.grades[j]) + ")";
  }
  out += "\n";

  std::size_t id_width = doc.overall.subject_id.size();
  for (const auto& vector : doc.group_vectors) {
    id_width = std::max(id_width, vector.subject_id.size());
  }
  if (!doc.group_vectors.empty()) {
    out += "\nGroup evaluation vectors:\n";
    for (const auto& vector : doc.group_vectors) {
      out += "  " + pad(vector.subject_id, id_width);
      for (const double value : vector.values) out += " " + fixed6(value);
      out += "\n";
    }
  }
  out += "\nOverall " + pad("", id_width > 7 ? id_width - 7 : 0);
  for (const double value : doc.overall.values) out += " " + fixed6(value);
  out += "\n";
  if (!doc.overall.raw_values.empty()) {
    out += "Before rescaling:";
    for (const double value : doc.overall.raw_values) out += " " + fixed6(value);
    out += "\n";
  }

  out += "\nVerdict: " + doc.verdict.winning_label + " (membership " +
         format_short(doc.verdict.winning_value) + ")\n";
  if (doc.verdict.tied_labels.size() > 1) {
    out += "Tied within epsilon:";
    for (const auto& label : doc.verdict.tied_labels) out += " " + label;
    out += "\n";
  }
  out += "Weighted score: " + format_short(doc.verdict.weighted_score) + "\n";
  return out;
}

std::string render_weight_table(const IndexTree& tree, const std::vector<WeightSheet>& sheets,
                                const std::map<std::string, WeightVector>& weights) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"group", "member"};
  for (const auto& sheet : sheets) header.push_back(sheet.consultant_id);
  header.push_back("average");
  header.push_back("normalized");
  rows.push_back(header);

  for (const auto& group_id : group_ids(tree)) {
    const auto it = weights.find(group_id);
    if (it == weights.end()) {
      throw ComputeError("no weight vector for group '" + group_id + "'");
    }
    const auto& vector = it->second;
    for (std::size_t k = 0; k < vector.member_ids.size(); ++k) {
      std::vector<std::string> row = {group_id, vector.member_ids[k]};
      for (const auto& sheet : sheets) {
        std::string cell = "-";
        if (const auto group_it = sheet.group_scores.find(group_id);
            group_it != sheet.group_scores.end()) {
          if (const auto score_it = group_it->second.find(vector.member_ids[k]);
              score_it != group_it->second.end()) {
            cell = format_short(score_it->second);
          }
        }
        row.push_back(std::move(cell));
      }
      row.push_back(format_short(vector.averages[k]));
      row.push_back(format_short(vector.normalized[k]));
      rows.push_back(std::move(row));
    }
  }

  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += "  ";
      out += c + 1 < row.size() ? pad(row[c], widths[c]) : row[c];
    }
    out += "\n";
  }
  return out;
}

}  // namespace fce
