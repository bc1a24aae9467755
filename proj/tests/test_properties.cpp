#include <doctest.h>

#include "properties.hpp"

namespace {

void run(std::optional<std::string> (*property)(int, std::uint64_t), std::uint64_t seed) {
  auto failure = property(200, seed);
  CHECK_MESSAGE(!failure.has_value(), failure.value_or(""));
}

}  // namespace

TEST_CASE("property: raising a threshold never admits a player") {
  run(props::threshold_monotonicity, 0xA1);
}

TEST_CASE("property: appending new players never evicts existing members") {
  run(props::permanence_under_appends, 0xA2);
}

TEST_CASE("property: partition sets are disjoint and cover both inputs") {
  run(props::partition_identities, 0xA3);
}

TEST_CASE("property: parse/print round-trips every valid rule spelling") {
  run(props::parse_print_round_trip, 0xA4);
}

TEST_CASE("property: rule membership equals the brute-force oracle") {
  run(props::members_oracle_equivalence, 0xA5);
}

TEST_CASE("property: landscape counts fall as either threshold rises") {
  run(props::matrix_monotonicity, 0xA6);
}

TEST_CASE("property: sweep results are identical under any thread count") {
  run(props::parallel_sweep_determinism, 0xA7);
}

TEST_CASE("property: margins agree with evaluate and with the raw counts") {
  run(props::margins_consistency, 0xA8);
}

TEST_CASE("property: full-depth selectivity counts the whole elected set") {
  run(props::selectivity_full_depth, 0xA9);
}
