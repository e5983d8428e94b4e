#include "doctest.h"

#include <string>

#include "skewsmash/config.hpp"

using namespace skewsmash;

namespace {

std::string error_text(const std::string& text) {
  try {
    parse_config(text);
  } catch (const config_error& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("task names round trip in canonical order") {
  for (auto t : {TaskKind::molien, TaskKind::trace, TaskKind::reflection, TaskKind::hdet,
                 TaskKind::pertinency, TaskKind::membership, TaskKind::verify_lemma53}) {
    CHECK(parse_task(task_name(t)) == t);
  }
  CHECK(task_name(TaskKind::verify_lemma53) == "verify_lemma53");
}

TEST_CASE("defaults are filled in") {
  auto cfg = parse_config(R"({"ring": {"n": 3, "q": "minus_one"}})");
  CHECK(cfg.n == 3);
  CHECK(cfg.q_choice == QChoice::minus_one);
  CHECK(cfg.field_kind == ConfigFieldKind::rational);
  CHECK(cfg.group_kind == GroupKind::cyclic_permutation);
  CHECK(cfg.smash_kind == SmashKind::group);
  CHECK(cfg.max_degree == 12);
  CHECK(cfg.field_policy == FieldPolicy::exact);
  REQUIRE(cfg.tasks.size() == 1);
  CHECK(cfg.tasks[0] == TaskKind::pertinency);
  CHECK(cfg.field_name() == "rational");
}

TEST_CASE("tasks are deduplicated into execution order") {
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "tasks": ["pertinency", "molien", "hdet", "molien", "trace"]
  })");
  REQUIRE(cfg.tasks.size() == 4);
  CHECK(cfg.tasks[0] == TaskKind::molien);
  CHECK(cfg.tasks[1] == TaskKind::trace);
  CHECK(cfg.tasks[2] == TaskKind::hdet);
  CHECK(cfg.tasks[3] == TaskKind::pertinency);
}

TEST_CASE("explicit q matrices parse with rational and root entries") {
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": [[1, "zeta"], ["zeta^-1", 1]]},
    "field": {"kind": "cyclotomic", "order": 4}
  })");
  CHECK(cfg.q_choice == QChoice::matrix);
  REQUIRE(cfg.q_matrix.size() == 2);
  CHECK(cfg.q_matrix[0][1].is_root_power);
  CHECK(cfg.q_matrix[0][1].root_exponent == 1);
  CHECK(cfg.q_matrix[1][0].root_exponent == -1);
  CHECK(cfg.field_name() == "cyclotomic(4)");
}

TEST_CASE("explicit generators parse with one indexed permutations") {
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "group": {"kind": "explicit", "generators": [
      {"perm": [2, 1], "scalars": [1, 1]},
      {"perm": [1, 2], "scalars": [-1, -1]}
    ]}
  })");
  CHECK(cfg.group_kind == GroupKind::explicit_generators);
  REQUIRE(cfg.generators.size() == 2);
  CHECK(cfg.generators[0].perm == std::vector<unsigned>{1, 0});
  CHECK(cfg.generators[1].perm == std::vector<unsigned>{0, 1});
  CHECK(cfg.generators[1].scalars[0].value == Rational(-1));
}

TEST_CASE("every violation is listed in one error") {
  auto msg = error_text(R"({
    "ring": {"n": 40, "q": "sideways"},
    "field": {"kind": "prime", "p": 97},
    "max_degree": 1,
    "tasks": ["nope"]
  })");
  CHECK(msg.find("ring.n") != std::string::npos);
  CHECK(msg.find("sideways") != std::string::npos);
  CHECK(msg.find("nope") != std::string::npos);
  CHECK(msg.find("max_degree") != std::string::npos);
  CHECK(std::count(msg.begin(), msg.end(), '\n') >= 4);
}

TEST_CASE("structural rejections") {
  CHECK(error_text(R"({"ring": {"n": 2, "q": "minus_one"}, "smash": {"kind": "dual"}})")
            .find("grading") != std::string::npos);
  CHECK(error_text(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "smash": {"kind": "dual"},
    "grading": [1, 1],
    "group": {"kind": "explicit", "generators": [{"perm": [2, 1], "scalars": [1, 1]}]}
  })").find("cyclic_permutation") != std::string::npos);
  CHECK(error_text(R"({"ring": {"n": 2, "q": "minus_one"}, "tasks": ["membership"]})")
            .find("membership") != std::string::npos);
  CHECK(error_text(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "smash": {"kind": "dual"},
    "grading": [1, 1],
    "tasks": ["molien"]
  })").find("molien") != std::string::npos);
  CHECK(error_text(R"({"ring": {"n": 2, "q": [[1, "zeta"], ["zeta^-1", 1]]}})")
            .find("cyclotomic") != std::string::npos);
  CHECK(error_text(R"({"ring": {"n": 2, "q": [[1, 0], [0, 1]]}})").find("zero") !=
        std::string::npos);
  CHECK(error_text(R"({"ring": {"n": 2, "q": "minus_one"}, "tasks": ["verify_lemma53"]})")
            .find("verify_lemma53") != std::string::npos);
  CHECK(error_text(R"({"ring": {"n": 2, "q": "minus_one"}, "surprise": 1})")
            .find("surprise") != std::string::npos);
  CHECK_FALSE(error_text(R"({"ring": {"n": 0, "q": "minus_one"}})").empty());
  CHECK_FALSE(error_text("{not json").empty());
}

TEST_CASE("prime fields must use certificate sized primes") {
  auto msg = error_text(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "field": {"kind": "prime", "p": 5}
  })");
  CHECK_FALSE(msg.empty());
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "field": {"kind": "prime", "p": 1073741827}
  })");
  CHECK(cfg.prime == 1073741827);
  CHECK(cfg.field_name() == "gf(1073741827)");
}

TEST_CASE("the normalized echo is a fixed point of parsing") {
  auto cfg = parse_config(R"({
    "ring": {"n": 4, "q": "minus_one"},
    "field": {"kind": "cyclotomic", "order": 4},
    "max_degree": 10,
    "field_policy": "modular_then_exact",
    "tasks": ["pertinency", "verify_lemma53"]
  })");
  auto echo = config_to_json(cfg);
  auto cfg2 = parse_config(echo.dump());
  CHECK(config_to_json(cfg2) == echo);
  CHECK(echo["ring"]["n"] == 4);
  CHECK(echo["field"]["order"] == 4);
  CHECK(echo["field_policy"] == "modular_then_exact");
}

TEST_CASE("the echo keeps explicit generators and gradings") {
  auto cfg = parse_config(R"({
    "ring": {"n": 2, "q": "minus_one"},
    "smash": {"kind": "dual"},
    "grading": [1, 3],
    "tasks": ["pertinency", "membership"]
  })");
  CHECK(cfg.grading == std::vector<unsigned>{1, 1});
  auto echo = config_to_json(cfg);
  CHECK(echo["grading"] == nlohmann::ordered_json::array({1, 1}));
  auto cfg2 = parse_config(echo.dump());
  CHECK(config_to_json(cfg2) == echo);
}

TEST_CASE("field specs override the config") {
  auto cfg = parse_config(R"({"ring": {"n": 2, "q": "minus_one"}})");
  apply_field_spec(cfg, "cyclotomic:6");
  CHECK(cfg.field_kind == ConfigFieldKind::cyclotomic);
  CHECK(cfg.cyclotomic_order == 6);
  apply_field_spec(cfg, "prime:1073741827");
  CHECK(cfg.field_kind == ConfigFieldKind::prime);
  CHECK(cfg.prime == 1073741827);
  apply_field_spec(cfg, "rational");
  CHECK(cfg.field_kind == ConfigFieldKind::rational);
  CHECK_THROWS_AS(apply_field_spec(cfg, "cyclotomic:x"), config_error);
  CHECK_THROWS_AS(apply_field_spec(cfg, "prime:6"), config_error);
  CHECK_THROWS_AS(apply_field_spec(cfg, "gaussian"), config_error);
}

} // TEST_SUITE
