#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewsmash/pertinency.hpp"
#include "skewsmash/rational.hpp"

namespace skewsmash {

enum class TaskKind {
  molien,
  trace,
  reflection,
  hdet,
  pertinency,
  membership,
  verify_lemma53,
};

std::string task_name(TaskKind t);
TaskKind parse_task(const std::string& s);

enum class QChoice { minus_one, commutative, matrix };
enum class ConfigFieldKind { rational, cyclotomic, prime };
enum class GroupKind { cyclic_permutation, explicit_generators };
enum class SmashKind { group, dual };

// A scalar entry of the config: a rational literal, or an integer power of
// the primitive root of a cyclotomic coefficient field.
struct ScalarLiteral {
  bool is_root_power = false;
  long root_exponent = 0;
  Rational value = 0;

  std::string text() const;
};

struct GeneratorSpec {
  // Images of the generators, 0-indexed: x_i maps to scalars[i] * x_{perm[i]}.
  // The JSON form uses 1-indexed generator numbers.
  std::vector<unsigned> perm;
  std::vector<ScalarLiteral> scalars;
};

struct ExperimentConfig {
  unsigned n = 2;
  QChoice q_choice = QChoice::minus_one;
  std::vector<std::vector<ScalarLiteral>> q_matrix;

  ConfigFieldKind field_kind = ConfigFieldKind::rational;
  unsigned cyclotomic_order = 1;
  std::uint64_t prime = 0;

  GroupKind group_kind = GroupKind::cyclic_permutation;
  std::vector<GeneratorSpec> generators;

  SmashKind smash_kind = SmashKind::group;
  std::vector<unsigned> grading;

  unsigned max_degree = 8;
  FieldPolicy field_policy = FieldPolicy::exact;
  std::vector<TaskKind> tasks{TaskKind::pertinency};

  std::string field_name() const;
};

// Parses and validates a JSON config. Collects every violation before
// throwing a single config_error that lists them all.
ExperimentConfig parse_config(const std::string& text);

// Normalized echo with defaults filled in; identical configs produce
// identical JSON regardless of the input formatting.
nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg);

// Overrides a config's field from a CLI spec: "rational", "cyclotomic:N",
// or "prime:P".
void apply_field_spec(ExperimentConfig& cfg, const std::string& spec);

} // namespace skewsmash
