#include "doctest.h"

#include <set>
#include <string>

#include "skewsmash/experiment.hpp"
#include "skewsmash/repro.hpp"
#include "skewsmash/version.hpp"

using namespace skewsmash;

TEST_SUITE("experiment") {

TEST_CASE("modular only certification on the smallest skew action") {
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "max_degree": 6,
    "field_policy": "modular_only",
    "tasks": ["pertinency"]
  })");
  Report r = run_experiment(cfg);
  REQUIRE_FALSE(report_has_errors(r));
  const auto& p = r.results["pertinency"];
  CHECK(p["status"] == "ok");
  CHECK(p["arithmetic"] == "modular");
  CHECK(p["classification"] == "certified_finite");
  CHECK(p["zero_degree"] == 2);
  CHECK(p["pertinency"] == 2);
  CHECK(p["pertinency_exact"] == true);
  CHECK(p["estimator_window"] == 4);
  CHECK(p["certificate_primes"].size() == 3);
  auto h = p["hilbert_quotient"].get<std::vector<long>>();
  CHECK(h == std::vector<long>{1, 1, 0, 0, 0, 0, 0});
}

TEST_CASE("an explicit swap generator matches the cyclic permutation group") {
  auto cyclic = parse_config(R"({
    "ring": {"n": 2, "q": "commutative"},
    "max_degree": 8,
    "tasks": ["pertinency"]
  })");
  auto explicit_swap = parse_config(R"({
    "ring": {"n": 2, "q": "commutative"},
    "group": {"kind": "explicit", "generators": [{"perm": [2, 1], "scalars": [1, 1]}]},
    "max_degree": 8,
    "tasks": ["pertinency"]
  })");
  Report a = run_experiment(cyclic);
  Report b = run_experiment(explicit_swap);
  CHECK(a.results["pertinency"]["table"] == b.results["pertinency"]["table"]);
  CHECK(a.results["pertinency"]["classification"] == "estimated(1)");
  CHECK(b.results["pertinency"]["classification"] == "estimated(1)");
  CHECK(b.results["pertinency"]["pertinency"] == 1);
  CHECK(b.results["pertinency"]["pertinency_exact"] == false);
}

TEST_CASE("prime coefficient fields run the exact policy with a note") {
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "field": {"kind": "prime", "p": 1073741827},
    "max_degree": 6,
    "field_policy": "modular_then_exact",
    "tasks": ["pertinency"]
  })");
  Report r = run_experiment(cfg);
  const auto& p = r.results["pertinency"];
  CHECK(p["arithmetic"] == "gf(1073741827)");
  CHECK(p["classification"] == "certified_finite");
  bool noted = false;
  for (const auto& note : p["notes"]) {
    if (note.get<std::string>().find("already modular") != std::string::npos) noted = true;
  }
  CHECK(noted);
}

TEST_CASE("semantic validation rejects impossible task setups") {
  auto trivial_group = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "group": {"kind": "explicit", "generators": [{"perm": [1, 2], "scalars": [1, 1]}]},
    "tasks": ["reflection"]
  })");
  CHECK_THROWS_AS(validate_semantics(trivial_group), config_error);

  auto degenerate_grading = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "smash": {"kind": "dual"},
    "grading": [0, 0],
    "tasks": ["pertinency", "membership"]
  })");
  CHECK_THROWS_AS(validate_semantics(degenerate_grading), config_error);

  auto broken_generator = parse_config(R"({
    "ring": {"n": 2, "q": [[1, 2], ["1/2", 1]]},
    "group": {"kind": "explicit", "generators": [{"perm": [2, 1], "scalars": [1, 1]}]},
    "tasks": ["pertinency"]
  })");
  CHECK_THROWS_AS(validate_semantics(broken_generator), config_error);
}

TEST_CASE("membership sampling is seed deterministic") {
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "smash": {"kind": "dual"},
    "grading": [1, 1],
    "max_degree": 8,
    "tasks": ["membership"]
  })");
  RunOptions opts;
  opts.seed = 7;
  opts.membership_samples = 10;
  Report a = run_experiment(cfg, opts);
  Report b = run_experiment(cfg, opts);
  const auto& ma = a.results["membership"];
  CHECK(ma["status"] == "ok");
  CHECK(ma["all_contained"] == true);
  CHECK(ma["samples"] == 10);
  CHECK(ma["seed"] == 7);
  CHECK(ma == b.results["membership"]);
}

TEST_CASE("repro cases are unique and resolvable") {
  const auto& cases = repro_cases();
  REQUIRE_FALSE(cases.empty());
  std::set<std::string> ids;
  for (const auto& c : cases) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.summary.empty());
    CHECK_NOTHROW(parse_config(config_to_json(c.config).dump()));
  }
  CHECK(find_repro_case("pertinency-skew-n2").config.n == 2);
  CHECK(find_repro_case("identity-suite-n4").config.tasks ==
        std::vector<TaskKind>{TaskKind::verify_lemma53});
  CHECK_THROWS_AS(find_repro_case("no-such-case"), config_error);
}

TEST_CASE("the report echoes the normalized config") {
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "max_degree": 6,
    "tasks": ["hdet", "molien"]
  })");
  Report r = run_experiment(cfg);
  CHECK(r.config == config_to_json(cfg));
  CHECK(r.version == std::string(tool_version));
  CHECK(r.results.contains("molien"));
  CHECK(r.results.contains("hdet"));
  CHECK(r.timings_ms.contains("molien"));
  CHECK(r.results["hdet"]["all_trivial"] == true);
  CHECK(r.results["molien"]["series"][4] == "3");
}

} // TEST_SUITE
