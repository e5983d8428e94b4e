#include "doctest.h"

#include <string>

#include "skewsmash/experiment.hpp"
#include "skewsmash/report.hpp"

using namespace skewsmash;

namespace {

const Report& skew_n2_report() {
  static Report r = [] {
    auto cfg = parse_config(R"({
      "ring": {"n": 2, "q": "minus_one"},
      "max_degree": 6,
      "tasks": ["molien", "pertinency"]
    })");
    return run_experiment(cfg);
  }();
  return r;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("json output round trips through the parser") {
  const Report& r = skew_n2_report();
  auto text = emit_json(r);
  Report back = report_from_json(text);
  CHECK(back.config == r.config);
  CHECK(back.results == r.results);
  CHECK(back.timings_ms == r.timings_ms);
  CHECK(back.version == r.version);
  CHECK(emit_json(back) == text);
  CHECK_THROWS_AS(report_from_json("{\"config\": {}}"), config_error);
  CHECK_THROWS_AS(report_from_json("not json"), config_error);
}

TEST_CASE("json output is deterministic apart from timings") {
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "max_degree": 6,
    "tasks": ["molien", "pertinency"]
  })");
  Report a = run_experiment(cfg);
  Report b = run_experiment(cfg);
  CHECK(emit_json(strip_timings(a)) == emit_json(strip_timings(b)));
}

TEST_CASE("csv output lists the quotient table") {
  auto text = emit_csv(skew_n2_report());
  CHECK(text.rfind("degree,dim_B,dim_I,h\n", 0) == 0);
  CHECK(text.find("0,2,1,1") != std::string::npos);
  CHECK(text.find("2,6,6,0") != std::string::npos);

  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "max_degree": 4,
    "tasks": ["molien"]
  })");
  Report no_table = run_experiment(cfg);
  CHECK_THROWS_AS(emit_csv(no_table), config_error);
}

TEST_CASE("table output names the classification and the result") {
  auto text = emit_table(skew_n2_report());
  CHECK(text.find("classification: certified_finite at degree 2") != std::string::npos);
  CHECK(text.find("pertinency: 2 (exact)") != std::string::npos);
  CHECK(text.find("molien") != std::string::npos);
  CHECK(emit_report(skew_n2_report(), "table") == text);
  CHECK(emit_report(skew_n2_report(), "json") == emit_json(skew_n2_report()));
  CHECK_THROWS_AS(emit_report(skew_n2_report(), "yaml"), config_error);
}

TEST_CASE("error statuses are detected") {
  CHECK_FALSE(report_has_errors(skew_n2_report()));
  Report broken = skew_n2_report();
  broken.results["molien"] = {{"status", "error"}, {"error", "synthetic"}};
  CHECK(report_has_errors(broken));
}

TEST_CASE("stripped timings are zero but keep their keys") {
  Report r = strip_timings(skew_n2_report());
  REQUIRE_FALSE(r.timings_ms.empty());
  for (const auto& item : r.timings_ms.items()) {
    CHECK(item.value().get<double>() == 0.0);
  }
}

} // TEST_SUITE
