#include "doctest.h"

#include "skewsmash/pertinency.hpp"

using namespace skewsmash;

namespace {

std::vector<DegreeRecord> table_from_h(std::vector<long long> h, unsigned vars) {
  std::vector<DegreeRecord> table;
  for (unsigned d = 0; d < h.size(); ++d) {
    long long total = static_cast<long long>(monomial_count(d, vars)) * vars;
    table.push_back({d, total, total - h[d], h[d]});
  }
  return table;
}

} // namespace

TEST_SUITE("pertinency") {

TEST_CASE("policy names round trip") {
  for (auto p : {FieldPolicy::exact, FieldPolicy::modular_then_exact,
                 FieldPolicy::modular_only}) {
    CHECK(parse_field_policy(field_policy_name(p)) == p);
  }
  CHECK(field_policy_name(FieldPolicy::modular_then_exact) == "modular_then_exact");
  CHECK_THROWS_AS(parse_field_policy("sometimes"), config_error);
}

TEST_CASE("totient floors") {
  CHECK(cyclic_skew_totient_floor(2) == 1);
  CHECK(cyclic_skew_totient_floor(3) == 2);
  CHECK(cyclic_skew_totient_floor(4) == 1);
  CHECK(cyclic_skew_totient_floor(5) == 4);
  CHECK(cyclic_skew_totient_floor(6) == 2);
  CHECK(cyclic_skew_totient_floor(8) == 2);
  CHECK(cyclic_skew_totient_floor(12) == 2);
}

TEST_CASE("a vanishing table certifies the full pertinency") {
  auto summary = summarize_pertinency(2, table_from_h({1, 1, 0, 0, 0}, 2), true, 2, 4);
  CHECK(summary.certified);
  CHECK(summary.zero_degree == 2);
  CHECK(summary.classification == "certified_finite");
  REQUIRE(summary.gk_quotient.has_value());
  CHECK(*summary.gk_quotient == 0);
  REQUIRE(summary.pertinency.has_value());
  CHECK(*summary.pertinency == 2);
  CHECK(summary.pertinency_exact);
}

TEST_CASE("a settled table yields an estimate") {
  auto summary =
      summarize_pertinency(3, table_from_h({3, 5, 4, 4, 4, 4, 4, 4}, 3), false, 0, 4);
  CHECK_FALSE(summary.certified);
  CHECK(summary.classification == "estimated(1)");
  CHECK(summary.growth.kind == GrowthEstimate::Kind::polynomial);
  CHECK(summary.growth.gk_dimension == 1);
  REQUIRE(summary.pertinency.has_value());
  CHECK(*summary.pertinency == 2);
  CHECK_FALSE(summary.pertinency_exact);
}

TEST_CASE("an unsettled table is inconclusive") {
  auto summary =
      summarize_pertinency(2, table_from_h({1, 2, 4, 8, 16, 32, 64, 128}, 2), false, 0, 4);
  CHECK(summary.classification == "inconclusive");
  CHECK_FALSE(summary.gk_quotient.has_value());
  CHECK_FALSE(summary.pertinency.has_value());
}

TEST_CASE("the estimator window shrinks to fit short tables") {
  auto summary = summarize_pertinency(2, table_from_h({2, 3, 3, 3}, 2), false, 0, 10);
  CHECK(summary.estimator_window < 10);
  CHECK(summary.classification == "estimated(1)");
}

TEST_CASE("tables that are too short are rejected") {
  CHECK_THROWS_AS(summarize_pertinency(2, table_from_h({1}, 2), false, 0, 4), config_error);
  CHECK_THROWS_AS(summarize_pertinency(2, {}, false, 0, 4), config_error);
}

} // TEST_SUITE
