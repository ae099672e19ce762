#include <doctest.h>

#include "support/properties.hpp"

// Each property runs over at least 100 generated instances. Failures print
// the instance index and seed, which reproduce the case exactly.

TEST_CASE("membership matrices are row-stochastic") {
  const auto outcome = props::row_stochasticity(120, 1001);
  CHECK_MESSAGE(outcome.ok, outcome.detail);
}

TEST_CASE("aggregated weights are normalized per group") {
  const auto outcome = props::weight_normalization(120, 1002);
  CHECK_MESSAGE(outcome.ok, outcome.detail);
}

TEST_CASE("permuting sheets and ballots changes nothing, bit for bit") {
  const auto outcome = props::permutation_invariance(120, 1003);
  CHECK_MESSAGE(outcome.ok, outcome.detail);
}

TEST_CASE("composition outputs stay normalized under both operators") {
  const auto outcome = props::normalization_preservation(120, 1004);
  CHECK_MESSAGE(outcome.ok, outcome.detail);
}

TEST_CASE("upgrading one ballot grade never lowers the weighted score") {
  const auto outcome = props::monotone_weighted_score(120, 1005);
  CHECK_MESSAGE(outcome.ok, outcome.detail);
}

TEST_CASE("positive rescaling never moves the argmax") {
  const auto outcome = props::argmax_invariance(120, 1006);
  CHECK_MESSAGE(outcome.ok, outcome.detail);
}
