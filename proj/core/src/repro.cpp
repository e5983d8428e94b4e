#include "skewsmash/repro.hpp"

#include <algorithm>

#include "skewsmash/errors.hpp"

namespace skewsmash {

namespace {

ExperimentConfig skew_cyclic(unsigned n) {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.q_choice = QChoice::minus_one;
  cfg.field_kind = ConfigFieldKind::rational;
  cfg.group_kind = GroupKind::cyclic_permutation;
  cfg.smash_kind = SmashKind::group;
  cfg.max_degree = 4 * n;
  return cfg;
}

ReproCase make_case(std::string id, std::string summary, ExperimentConfig cfg) {
  return ReproCase{std::move(id), std::move(summary), std::move(cfg)};
}

std::vector<ReproCase> build_cases() {
  std::vector<ReproCase> cases;

  {
    auto cfg = skew_cyclic(2);
    cfg.max_degree = 8;
    cfg.tasks = {TaskKind::molien, TaskKind::trace, TaskKind::reflection, TaskKind::hdet,
                 TaskKind::pertinency};
    cases.push_back(make_case(
        "pertinency-skew-n2",
        "two skew variables under the cyclic swap: certified pertinency 2, reflection number "
        "2, trivial homological determinants",
        cfg));
  }
  {
    auto cfg = skew_cyclic(4);
    cfg.max_degree = 16;
    cfg.field_policy = FieldPolicy::modular_then_exact;
    cfg.tasks = {TaskKind::pertinency};
    cases.push_back(make_case("pertinency-skew-n4",
                              "four skew variables under the cyclic rotation: certified "
                              "pertinency 4 with a modular scout",
                              cfg));
  }
  {
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.q_choice = QChoice::commutative;
    cfg.field_kind = ConfigFieldKind::rational;
    cfg.group_kind = GroupKind::cyclic_permutation;
    cfg.smash_kind = SmashKind::group;
    cfg.max_degree = 12;
    cfg.tasks = {TaskKind::pertinency};
    cases.push_back(make_case("pertinency-commutative-n2",
                              "two commuting variables under the swap: the quotient stays one "
                              "dimensional, pertinency 1",
                              cfg));
  }
  for (unsigned n = 2; n <= 8; ++n) {
    auto cfg = skew_cyclic(n);
    cfg.tasks = {TaskKind::reflection};
    cases.push_back(make_case("reflection-skew-n" + std::to_string(n),
                              "reflection number of the cyclic rotation on " +
                                  std::to_string(n) + " skew variables",
                              cfg));
  }
  {
    auto cfg = skew_cyclic(3);
    cfg.max_degree = 12;
    cfg.tasks = {TaskKind::pertinency};
    cases.push_back(make_case("floor-skew-n3",
                              "three skew variables under the rotation: totient floor 2 on the "
                              "pertinency",
                              cfg));
  }
  {
    auto cfg = skew_cyclic(5);
    cfg.max_degree = 20;
    cfg.field_policy = FieldPolicy::modular_only;
    cfg.tasks = {TaskKind::pertinency};
    cases.push_back(make_case("floor-skew-n5",
                              "five skew variables under the rotation, modular tables: totient "
                              "floor 4",
                              cfg));
  }
  {
    auto cfg = skew_cyclic(6);
    cfg.max_degree = 24;
    cfg.field_policy = FieldPolicy::modular_only;
    cfg.tasks = {TaskKind::pertinency};
    cases.push_back(make_case("floor-skew-n6",
                              "six skew variables under the rotation, modular tables: totient "
                              "floor 2",
                              cfg));
  }
  for (unsigned n = 2; n <= 6; ++n) {
    auto cfg = skew_cyclic(n);
    cfg.tasks = {TaskKind::hdet};
    cases.push_back(make_case("hdet-skew-n" + std::to_string(n),
                              "homological determinants of all rotation powers on " +
                                  std::to_string(n) + " skew variables are 1",
                              cfg));
  }
  {
    auto cfg = skew_cyclic(4);
    cfg.field_kind = ConfigFieldKind::cyclotomic;
    cfg.cyclotomic_order = 4;
    cfg.max_degree = 16;
    cfg.tasks = {TaskKind::verify_lemma53};
    cases.push_back(make_case("identity-suite-n4",
                              "eigenbasis identities for four skew variables over the fourth "
                              "cyclotomic field: anticommutators and power memberships",
                              cfg));
  }
  {
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.q_choice = QChoice::minus_one;
    cfg.field_kind = ConfigFieldKind::rational;
    cfg.group_kind = GroupKind::cyclic_permutation;
    cfg.smash_kind = SmashKind::dual;
    cfg.grading = {1, 1};
    cfg.max_degree = 8;
    cfg.tasks = {TaskKind::pertinency, TaskKind::membership};
    cases.push_back(make_case("membership-dual-n2",
                              "dual smash of two skew variables with the generating grading: "
                              "covering products land in the ideal",
                              cfg));
  }
  return cases;
}

} // namespace

const std::vector<ReproCase>& repro_cases() {
  static const std::vector<ReproCase> cases = build_cases();
  return cases;
}

const ReproCase& find_repro_case(const std::string& id) {
  const auto& cases = repro_cases();
  auto it = std::find_if(cases.begin(), cases.end(),
                         [&id](const ReproCase& c) { return c.id == id; });
  if (it == cases.end()) {
    std::string msg = "unknown repro case '" + id + "'; known cases:";
    for (const auto& c : cases) msg += "\n  " + c.id;
    throw config_error(msg);
  }
  return *it;
}

} // namespace skewsmash
