#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "fce/compose.hpp"
#include "fce/error.hpp"
#include "fce/io.hpp"

#include "support/builders.hpp"
#include "support/surveillance_expected.hpp"

namespace {

const std::string kDataDir = std::string(FCE_DATA_DIR) + "/surveillance";

fce::WeightVector weights_of(const std::string& group, std::vector<std::string> ids,
                             std::vector<double> normalized) {
  fce::WeightVector vector;
  vector.group_id = group;
  vector.member_ids = std::move(ids);
  vector.normalized = std::move(normalized);
  vector.averages = vector.normalized;
  return vector;
}

struct GoldenRun {
  fce::IndexTree tree;
  std::map<std::string, fce::WeightVector> weights;
  std::map<std::string, fce::MembershipMatrix> matrices;
};

GoldenRun load_golden() {
  GoldenRun run;
  run.tree = fce::parse_tree_file(kDataDir + "/tree.json");
  const auto sheets = fce::parse_weight_sheets(kDataDir + "/weight_sheets.csv", run.tree);
  run.weights = fce::aggregate_weights(sheets, run.tree);
  const auto ballots = fce::parse_ballots(kDataDir + "/ballots.csv", run.tree);
  const auto tallies = fce::tally_ballots(ballots, run.tree, fce::ValidSubsetPolicy::all());
  for (const auto& group_id : fce::leaf_group_ids(run.tree)) {
    run.matrices.emplace(group_id, fce::build_matrix(group_id, tallies, run.tree));
  }
  return run;
}

}  // namespace

TEST_CASE("operator names round-trip") {
  CHECK(fce::to_string(fce::CompositionOp::WeightedAverage) == std::string("weighted-average"));
  CHECK(fce::to_string(fce::CompositionOp::MaxMin) == std::string("max-min"));
  CHECK(fce::composition_op_from_string("weighted-average") ==
        fce::CompositionOp::WeightedAverage);
  CHECK(fce::composition_op_from_string("max-min") == fce::CompositionOp::MaxMin);
  CHECK(!fce::composition_op_from_string("average"));
}

TEST_CASE("weighted-average composition on a hand-checked fixture") {
  const auto weights = weights_of("g", {"m1", "m2"}, {0.25, 0.75});
  fce::MembershipMatrix matrix;
  matrix.group_id = "g";
  matrix.row_ids = {"m1", "m2"};
  matrix.entries = {{0.8, 0.2, 0.0}, {0.0, 0.4, 0.6}};

  const auto vector = fce::compose(weights, matrix, fce::CompositionOp::WeightedAverage);
  CHECK(vector.subject_id == "g");
  CHECK(vector.raw_values.empty());
  REQUIRE(vector.values.size() == 3);
  CHECK(std::abs(vector.values[0] - 0.2) <= 1e-15);
  CHECK(std::abs(vector.values[1] - 0.35) <= 1e-15);
  CHECK(std::abs(vector.values[2] - 0.45) <= 1e-15);
}

TEST_CASE("max-min keeps the raw vector and rescales to a distribution") {
  const auto weights = weights_of("g", {"m1", "m2"}, {0.3, 0.7});
  fce::MembershipMatrix matrix;
  matrix.group_id = "g";
  matrix.row_ids = {"m1", "m2"};
  matrix.entries = {{0.8, 0.2, 0.0}, {0.1, 0.5, 0.4}};

  // Column-wise: max(min(.3,.8), min(.7,.1)) = .3; max(min(.3,.2), min(.7,.5)) = .5;
  // max(min(.3,0), min(.7,.4)) = .4. Raw sum 1.2.
  const auto vector = fce::compose(weights, matrix, fce::CompositionOp::MaxMin);
  REQUIRE(vector.raw_values.size() == 3);
  CHECK(vector.raw_values[0] == 0.3);
  CHECK(vector.raw_values[1] == 0.5);
  CHECK(vector.raw_values[2] == 0.4);
  double sum = 0.0;
  for (const double v : vector.values) sum += v;
  CHECK(std::abs(sum - 1.0) <= 1e-15);
  CHECK(std::abs(vector.values[0] - 0.25) <= 1e-15);
}

TEST_CASE("max-min agrees with a brute-force oracle on random instances") {
  builders::Rand rng(4242);
  for (int i = 0; i < 50; ++i) {
    const std::size_t members = rng.between(2, 9);
    const std::size_t columns = rng.between(2, 6);
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < members; ++k) ids.push_back("m" + std::to_string(k + 1));
    const auto weights = builders::random_weight_vector(rng, "g", ids);
    const auto matrix = builders::random_matrix(rng, "g", ids, columns);

    std::vector<double> expected(columns, 0.0);
    for (std::size_t j = 0; j < columns; ++j) {
      for (std::size_t k = 0; k < members; ++k) {
        expected[j] = std::max(expected[j],
                               std::min(weights.normalized[k], matrix.entries[k][j]));
      }
    }
    const auto vector = fce::compose(weights, matrix, fce::CompositionOp::MaxMin);
    REQUIRE(vector.raw_values == expected);
  }
}

TEST_CASE("composition rejects misaligned inputs") {
  const auto weights = weights_of("g", {"m1", "m2"}, {0.5, 0.5});
  fce::MembershipMatrix matrix;
  matrix.group_id = "g";
  matrix.row_ids = {"m2", "m1"};  // right ids, wrong order
  matrix.entries = {{1.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS((void)fce::compose(weights, matrix, fce::CompositionOp::WeightedAverage),
                  fce::ComputeError);

  matrix.row_ids = {"m1", "m2"};
  matrix.entries = {{1.0, 0.0}, {0.0}};
  CHECK_THROWS_AS((void)fce::compose(weights, matrix, fce::CompositionOp::WeightedAverage),
                  fce::ComputeError);
}

TEST_CASE("bundled dataset composes to the published vectors") {
  const auto run = load_golden();
  const auto evaluation =
      fce::evaluate_tree(run.tree, run.weights, run.matrices, fce::CompositionOp::WeightedAverage);

  REQUIRE(evaluation.group_vectors.size() == testdata::kGroupCount);
  for (const auto& row : testdata::kGroupVectors) {
    const auto& vector = evaluation.group_vectors.at(row.id);
    REQUIRE(vector.values.size() == row.values.size());
    for (std::size_t j = 0; j < row.values.size(); ++j) {
      CHECK(std::abs(vector.values[j] - row.values[j]) <= 1e-12);
    }
  }
  REQUIRE(evaluation.overall.values.size() == testdata::kOverall.size());
  for (std::size_t j = 0; j < testdata::kOverall.size(); ++j) {
    CHECK(std::abs(evaluation.overall.values[j] - testdata::kOverall[j]) <= 1e-12);
  }
}

TEST_CASE("depth-1 trees compose the root directly") {
  const auto tree = builders::one_level_tree(2, 3);
  std::map<std::string, fce::WeightVector> weights;
  weights.emplace("root", weights_of("root", {"x1", "x2"}, {0.25, 0.75}));
  std::map<std::string, fce::MembershipMatrix> matrices;
  fce::MembershipMatrix matrix;
  matrix.group_id = "root";
  matrix.row_ids = {"x1", "x2"};
  matrix.entries = {{0.8, 0.2, 0.0}, {0.0, 0.4, 0.6}};
  matrices.emplace("root", matrix);

  const auto evaluation =
      fce::evaluate_tree(tree, weights, matrices, fce::CompositionOp::WeightedAverage);
  CHECK(evaluation.group_vectors.empty());
  CHECK(std::abs(evaluation.overall.values[2] - 0.45) <= 1e-15);
}

TEST_CASE("evaluation reports which group data is missing") {
  const auto run = load_golden();
  auto weights = run.weights;
  weights.erase("u5");
  CHECK_THROWS_WITH_AS(
      (void)fce::evaluate_tree(run.tree, weights, run.matrices,
                               fce::CompositionOp::WeightedAverage),
      "no weight vector for group 'u5'", fce::ComputeError);

  auto matrices = run.matrices;
  matrices.erase("u7");
  CHECK_THROWS_WITH_AS(
      (void)fce::evaluate_tree(run.tree, run.weights, matrices,
                               fce::CompositionOp::WeightedAverage),
      "no membership matrix for group 'u7'", fce::ComputeError);
}
