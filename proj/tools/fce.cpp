// Command-line front end: validate inputs, inspect weights, run evaluations,
// emit reports. Exit codes: 0 ok, 2 parse error, 3 validation error,
// 4 computation error.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fce/io.hpp"

namespace {

struct Options {
  std::string tree_file;
  std::string sheets_file;
  std::string ballots_file;
  std::string weights_policy = "all";
  std::string ballots_policy = "all";
  std::string op = "weighted-average";
  std::string out_file;
  double tie_epsilon = fce::kDefaultTieEpsilon;
  std::uint64_t seed = 0;
};

fce::ValidSubsetPolicy parse_policy(const std::string& text, std::uint64_t seed) {
  if (text == "all") return fce::ValidSubsetPolicy::all();
  constexpr std::string_view prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string count = text.substr(prefix.size());
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), k);
    if (ec == std::errc{} && ptr == count.data() + count.size() && k > 0) {
      return fce::ValidSubsetPolicy::random_k(k, seed);
    }
  }
  throw fce::ParseError("policy '" + text + "' must be 'all' or 'random:<k>'");
}

fce::ProjectBundle make_bundle(const Options& options) {
  fce::ProjectBundle bundle;
  bundle.tree_file = options.tree_file;
  bundle.weight_sheets_file = options.sheets_file;
  bundle.ballots_file = options.ballots_file;
  bundle.weights_policy = parse_policy(options.weights_policy, options.seed);
  bundle.ballots_policy = parse_policy(options.ballots_policy, options.seed);
  bundle.op = *fce::composition_op_from_string(options.op);
  bundle.tie_epsilon = options.tie_epsilon;
  return bundle;
}

void print_violations(const fce::ValidationReport& report) {
  for (const auto& violation : report.violations) {
    std::cout << "  " << fce::to_line(violation) << "\n";
  }
}

int run_validate(const Options& options) {
  bool ok = true;
  const fce::IndexTree tree = fce::parse_tree_file_raw(options.tree_file);
  const auto tree_report = fce::validate_tree(tree);
  if (tree_report.ok()) {
    std::cout << "tree: ok (" << fce::leaf_ids(tree).size() << " leaves, "
              << tree.comment_set.size() << " comments)\n";
  } else {
    ok = false;
    std::cout << "tree: " << tree_report.summary() << "\n";
    print_violations(tree_report);
  }

  if (!options.sheets_file.empty()) {
    const auto sheets = fce::parse_weight_sheets_raw(options.sheets_file);
    if (!tree_report.ok()) {
      std::cout << "sheets: skipped, tree is invalid\n";
    } else if (const auto report = fce::validate_sheets(sheets, tree); report.ok()) {
      std::cout << "sheets: ok (" << sheets.size() << " consultants)\n";
    } else {
      ok = false;
      std::cout << "sheets: " << report.summary() << "\n";
      print_violations(report);
    }
  }

  if (!options.ballots_file.empty()) {
    const auto ballots = fce::parse_ballots_raw(options.ballots_file);
    if (!tree_report.ok()) {
      std::cout << "ballots: skipped, tree is invalid\n";
    } else if (const auto report = fce::validate_ballots(ballots, tree); report.ok()) {
      std::cout << "ballots: ok (" << ballots.size() << " consultants)\n";
    } else {
      ok = false;
      std::cout << "ballots: " << report.summary() << "\n";
      print_violations(report);
    }
  }
  return ok ? 0 : 3;
}

int run_weights(const Options& options) {
  const fce::IndexTree tree = fce::parse_tree_file(options.tree_file);
  const auto sheets = fce::parse_weight_sheets(options.sheets_file, tree);
  const auto selected =
      fce::select_valid(sheets, parse_policy(options.weights_policy, options.seed));
  const auto weights = fce::aggregate_weights(selected, tree);
  std::cout << fce::render_weight_table(tree, selected, weights);
  return 0;
}

int run_evaluate(const Options& options) {
  const auto result = fce::run_pipeline(make_bundle(options));
  std::cout << fce::render_text(result.report);
  return 0;
}

int run_report(const Options& options) {
  const auto result = fce::run_pipeline(make_bundle(options));
  const std::string json = fce::to_json(result.report);
  if (options.out_file.empty()) {
    std::cout << json;
  } else {
    fce::write_file(options.out_file, json);
    std::cout << "report written to " << options.out_file << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options options;
  CLI::App app{"Hierarchical fuzzy comprehensive evaluation"};
  app.require_subcommand(1);

  const auto add_tree = [&](CLI::App* cmd) {
    cmd->add_option("--tree", options.tree_file, "Index tree and comment set (JSON)")
        ->required();
  };
  const auto add_sheets = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--sheets", options.sheets_file, "Weight score sheets (CSV)");
    if (required) opt->required();
  };
  const auto add_ballots = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--ballots", options.ballots_file, "Graded ballots (CSV)");
    if (required) opt->required();
  };
  const auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--operator", options.op, "Composition operator")
        ->check(CLI::IsMember({"weighted-average", "max-min"}))
        ->capture_default_str();
    cmd->add_option("--tie-epsilon", options.tie_epsilon, "Verdict tie tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--policy-weights", options.weights_policy,
                    "Sheet subset: 'all' or 'random:<k>'")
        ->capture_default_str();
    cmd->add_option("--policy-ballots", options.ballots_policy,
                    "Ballot subset: 'all' or 'random:<k>'")
        ->capture_default_str();
    cmd->add_option("--seed", options.seed, "Seed for random subset policies")
        ->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Check inputs, list every violation");
  add_tree(validate);
  add_sheets(validate, false);
  add_ballots(validate, false);

  auto* weights = app.add_subcommand("weights", "Print the aggregated weight table");
  add_tree(weights);
  add_sheets(weights, true);
  weights
      ->add_option("--policy-weights", options.weights_policy,
                   "Sheet subset: 'all' or 'random:<k>'")
      ->capture_default_str();
  weights->add_option("--seed", options.seed, "Seed for random subset policies")
      ->capture_default_str();

  auto* evaluate = app.add_subcommand("evaluate", "Run the evaluation, print a text report");
  add_tree(evaluate);
  add_sheets(evaluate, true);
  add_ballots(evaluate, true);
  add_run_flags(evaluate);

  auto* report = app.add_subcommand("report", "Run the evaluation, emit the JSON report");
  add_tree(report);
  add_sheets(report, true);
  add_ballots(report, true);
  add_run_flags(report);
  report->add_option("--out", options.out_file, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(options);
    if (app.got_subcommand(weights)) return run_weights(options);
    if (app.got_subcommand(evaluate)) return run_evaluate(options);
    return run_report(options);
  } catch (const fce::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& violation : e.report().violations) {
      std::cerr << "  " << fce::to_line(violation) << "\n";
    }
    return 3;
  } catch (const fce::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fce::ComputeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
