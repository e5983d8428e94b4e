#include "skewsmash/config.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "skewsmash/cyclotomic.hpp"
#include "skewsmash/errors.hpp"
#include "skewsmash/prime_field.hpp"

namespace skewsmash {

namespace {

using nlohmann::json;

constexpr unsigned max_generators = 8;

class Violations {
public:
  void add(const std::string& msg) { messages_.push_back(msg); }
  bool any() const { return !messages_.empty(); }
  void raise_if_any() const {
    if (messages_.empty()) return;
    std::string out = "invalid config:";
    for (const auto& m : messages_) out += "\n  - " + m;
    throw config_error(out);
  }

private:
  std::vector<std::string> messages_;
};

bool parse_root_power(const std::string& s, long& exponent) {
  if (s == "zeta") {
    exponent = 1;
    return true;
  }
  if (s.rfind("zeta^", 0) != 0) return false;
  std::string rest = s.substr(5);
  if (rest.empty()) return false;
  std::size_t pos = 0;
  try {
    exponent = std::stol(rest, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == rest.size();
}

bool parse_literal(const json& j, ScalarLiteral& out, std::string& err) {
  if (j.is_number_integer()) {
    out.is_root_power = false;
    out.value = Rational(static_cast<long>(j.get<std::int64_t>()));
    return true;
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    long k = 0;
    if (parse_root_power(s, k)) {
      out.is_root_power = true;
      out.root_exponent = k;
      return true;
    }
    try {
      out.is_root_power = false;
      out.value = parse_rational(s);
      return true;
    } catch (const std::exception& e) {
      err = "scalar \"" + s + "\" is neither a rational nor a power of zeta";
      return false;
    }
  }
  err = "scalar must be an integer or a string";
  return false;
}

std::string literal_to_json(const ScalarLiteral& lit) { return lit.text(); }

} // namespace

std::string ScalarLiteral::text() const {
  if (is_root_power) {
    if (root_exponent == 1) return "zeta";
    return "zeta^" + std::to_string(root_exponent);
  }
  return rational_to_string(value);
}

std::string task_name(TaskKind t) {
  switch (t) {
    case TaskKind::molien:
      return "molien";
    case TaskKind::trace:
      return "trace";
    case TaskKind::reflection:
      return "reflection";
    case TaskKind::hdet:
      return "hdet";
    case TaskKind::pertinency:
      return "pertinency";
    case TaskKind::membership:
      return "membership";
    case TaskKind::verify_lemma53:
      return "verify_lemma53";
  }
  return "pertinency";
}

TaskKind parse_task(const std::string& s) {
  if (s == "molien") return TaskKind::molien;
  if (s == "trace") return TaskKind::trace;
  if (s == "reflection") return TaskKind::reflection;
  if (s == "hdet") return TaskKind::hdet;
  if (s == "pertinency") return TaskKind::pertinency;
  if (s == "membership") return TaskKind::membership;
  if (s == "verify_lemma53") return TaskKind::verify_lemma53;
  throw config_error("unknown task \"" + s + "\"");
}

std::string ExperimentConfig::field_name() const {
  switch (field_kind) {
    case ConfigFieldKind::rational:
      return "rational";
    case ConfigFieldKind::cyclotomic:
      return "cyclotomic(" + std::to_string(cyclotomic_order) + ")";
    case ConfigFieldKind::prime:
      return "gf(" + std::to_string(prime) + ")";
  }
  return "rational";
}

ExperimentConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw config_error("config must be a JSON object");

  Violations bad;
  ExperimentConfig cfg;

  static const std::set<std::string> known_keys = {
      "ring", "field", "group", "smash", "grading", "max_degree", "field_policy", "tasks"};
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (!known_keys.count(it.key())) bad.add("unknown key \"" + it.key() + "\"");
  }

  if (!root.contains("ring") || !root["ring"].is_object()) {
    bad.add("ring must be an object with n and q");
  } else {
    const json& ring = root["ring"];
    if (!ring.contains("n") || !ring["n"].is_number_integer()) {
      bad.add("ring.n must be an integer");
    } else {
      long long n = ring["n"].get<long long>();
      if (n < 1 || n > max_generators) {
        bad.add("ring.n must lie in [1, " + std::to_string(max_generators) + "], got " +
                std::to_string(n));
      } else {
        cfg.n = static_cast<unsigned>(n);
      }
    }
    if (!ring.contains("q")) {
      bad.add("ring.q is required");
    } else if (ring["q"].is_string()) {
      std::string q = ring["q"].get<std::string>();
      if (q == "minus_one") {
        cfg.q_choice = QChoice::minus_one;
      } else if (q == "commutative") {
        cfg.q_choice = QChoice::commutative;
      } else {
        bad.add("ring.q string must be \"minus_one\" or \"commutative\", got \"" + q + "\"");
      }
    } else if (ring["q"].is_array()) {
      cfg.q_choice = QChoice::matrix;
      const json& rows = ring["q"];
      if (rows.size() != cfg.n) {
        bad.add("ring.q matrix must have n rows");
      } else {
        bool ok = true;
        for (const auto& row : rows) {
          if (!row.is_array() || row.size() != cfg.n) {
            bad.add("every ring.q row must have n entries");
            ok = false;
            break;
          }
        }
        if (ok) {
          for (const auto& row : rows) {
            std::vector<ScalarLiteral> parsed;
            for (const auto& entry : row) {
              ScalarLiteral lit;
              std::string err;
              if (!parse_literal(entry, lit, err)) {
                bad.add("ring.q entry: " + err);
              }
              parsed.push_back(lit);
            }
            cfg.q_matrix.push_back(std::move(parsed));
          }
        }
      }
    } else {
      bad.add("ring.q must be \"minus_one\", \"commutative\", or a matrix");
    }
  }

  if (!root.contains("field")) {
    cfg.field_kind = ConfigFieldKind::rational;
  } else if (!root["field"].is_object() || !root["field"].contains("kind") ||
             !root["field"]["kind"].is_string()) {
    bad.add("field must be an object with a string kind");
  } else {
    const json& field = root["field"];
    std::string kind = field["kind"].get<std::string>();
    if (kind == "rational") {
      cfg.field_kind = ConfigFieldKind::rational;
    } else if (kind == "cyclotomic") {
      cfg.field_kind = ConfigFieldKind::cyclotomic;
      if (!field.contains("order") || !field["order"].is_number_integer() ||
          field["order"].get<long long>() < 1) {
        bad.add("field.order must be a positive integer for a cyclotomic field");
      } else {
        cfg.cyclotomic_order = static_cast<unsigned>(field["order"].get<long long>());
      }
    } else if (kind == "prime") {
      cfg.field_kind = ConfigFieldKind::prime;
      if (!field.contains("p") || !field["p"].is_number_integer() ||
          field["p"].get<long long>() < 2) {
        bad.add("field.p must be an integer >= 2 for a prime field");
      } else {
        cfg.prime = static_cast<std::uint64_t>(field["p"].get<long long>());
        if (cfg.prime < (1ull << 30) || cfg.prime >= (1ull << 31)) {
          bad.add("field.p must lie in [2^30, 2^31)");
        } else if (!is_prime_u64(cfg.prime)) {
          bad.add("field.p = " + std::to_string(cfg.prime) + " is not prime");
        } else if ((2ull * cfg.n) % cfg.prime == 0) {
          bad.add("field.p must not divide 2n");
        }
      }
    } else {
      bad.add("field.kind must be \"rational\", \"cyclotomic\", or \"prime\", got \"" + kind +
              "\"");
    }
  }

  if (!root.contains("group")) {
    cfg.group_kind = GroupKind::cyclic_permutation;
  } else if (!root["group"].is_object() || !root["group"].contains("kind") ||
             !root["group"]["kind"].is_string()) {
    bad.add("group must be an object with a string kind");
  } else {
    const json& group = root["group"];
    std::string kind = group["kind"].get<std::string>();
    if (kind == "cyclic_permutation") {
      cfg.group_kind = GroupKind::cyclic_permutation;
    } else if (kind == "explicit") {
      cfg.group_kind = GroupKind::explicit_generators;
      if (!group.contains("generators") || !group["generators"].is_array() ||
          group["generators"].empty()) {
        bad.add("group.generators must be a nonempty array for an explicit group");
      } else {
        for (const auto& gen : group["generators"]) {
          GeneratorSpec spec;
          if (!gen.is_object() || !gen.contains("perm") || !gen.contains("scalars")) {
            bad.add("each generator needs perm and scalars arrays");
            continue;
          }
          const json& perm = gen["perm"];
          const json& scalars = gen["scalars"];
          if (!perm.is_array() || perm.size() != cfg.n) {
            bad.add("generator perm must list n generator numbers");
          } else {
            std::vector<bool> seen(cfg.n, false);
            bool ok = true;
            for (const auto& v : perm) {
              if (!v.is_number_integer() || v.get<long long>() < 1 ||
                  v.get<long long>() > cfg.n) {
                bad.add("generator perm entries must be integers in [1, n]");
                ok = false;
                break;
              }
              unsigned idx = static_cast<unsigned>(v.get<long long>()) - 1;
              if (seen[idx]) {
                bad.add("generator perm repeats " + std::to_string(idx + 1));
                ok = false;
                break;
              }
              seen[idx] = true;
              spec.perm.push_back(idx);
            }
            if (!ok) spec.perm.clear();
          }
          if (!scalars.is_array() || scalars.size() != cfg.n) {
            bad.add("generator scalars must list n entries");
          } else {
            for (const auto& entry : scalars) {
              ScalarLiteral lit;
              std::string err;
              if (!parse_literal(entry, lit, err)) {
                bad.add("generator scalar: " + err);
              }
              spec.scalars.push_back(lit);
            }
          }
          cfg.generators.push_back(std::move(spec));
        }
      }
    } else {
      bad.add("group.kind must be \"cyclic_permutation\" or \"explicit\", got \"" + kind + "\"");
    }
  }

  if (!root.contains("smash")) {
    cfg.smash_kind = SmashKind::group;
  } else if (!root["smash"].is_object() || !root["smash"].contains("kind") ||
             !root["smash"]["kind"].is_string()) {
    bad.add("smash must be an object with a string kind");
  } else {
    std::string kind = root["smash"]["kind"].get<std::string>();
    if (kind == "group") {
      cfg.smash_kind = SmashKind::group;
    } else if (kind == "dual") {
      cfg.smash_kind = SmashKind::dual;
    } else {
      bad.add("smash.kind must be \"group\" or \"dual\", got \"" + kind + "\"");
    }
  }

  if (root.contains("grading")) {
    if (cfg.smash_kind != SmashKind::dual) {
      bad.add("grading applies only to the dual smash");
    } else if (!root["grading"].is_array() || root["grading"].size() != cfg.n) {
      bad.add("grading must list one label per ring generator");
    } else {
      for (const auto& v : root["grading"]) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          bad.add("grading labels must be nonnegative integers");
          cfg.grading.clear();
          break;
        }
        cfg.grading.push_back(static_cast<unsigned>(v.get<long long>() % cfg.n));
      }
    }
  } else if (cfg.smash_kind == SmashKind::dual) {
    bad.add("dual smash requires a grading");
  }

  cfg.max_degree = 4 * cfg.n;
  if (root.contains("max_degree")) {
    if (!root["max_degree"].is_number_integer() || root["max_degree"].get<long long>() < 2) {
      bad.add("max_degree must be an integer >= 2");
    } else {
      cfg.max_degree = static_cast<unsigned>(root["max_degree"].get<long long>());
    }
  }

  if (root.contains("field_policy")) {
    if (!root["field_policy"].is_string()) {
      bad.add("field_policy must be a string");
    } else {
      try {
        cfg.field_policy = parse_field_policy(root["field_policy"].get<std::string>());
      } catch (const config_error& e) {
        bad.add(e.what());
      }
    }
  }

  if (root.contains("tasks")) {
    if (!root["tasks"].is_array() || root["tasks"].empty()) {
      bad.add("tasks must be a nonempty array");
    } else {
      std::set<TaskKind> seen;
      for (const auto& t : root["tasks"]) {
        if (!t.is_string()) {
          bad.add("tasks entries must be strings");
          continue;
        }
        try {
          seen.insert(parse_task(t.get<std::string>()));
        } catch (const config_error& e) {
          bad.add(e.what());
        }
      }
      if (!seen.empty()) cfg.tasks.assign(seen.begin(), seen.end());
    }
  }

  auto group_only = [&](TaskKind t) {
    if (cfg.smash_kind != SmashKind::group &&
        std::find(cfg.tasks.begin(), cfg.tasks.end(), t) != cfg.tasks.end()) {
      bad.add("task " + task_name(t) + " needs the group smash");
    }
  };
  group_only(TaskKind::molien);
  group_only(TaskKind::trace);
  group_only(TaskKind::reflection);
  group_only(TaskKind::hdet);
  group_only(TaskKind::verify_lemma53);
  if (cfg.smash_kind != SmashKind::dual &&
      std::find(cfg.tasks.begin(), cfg.tasks.end(), TaskKind::membership) != cfg.tasks.end()) {
    bad.add("task membership needs the dual smash");
  }

  if (cfg.smash_kind == SmashKind::dual && cfg.group_kind != GroupKind::cyclic_permutation) {
    bad.add("dual smash supports only group.kind cyclic_permutation (the grading group is the "
            "cyclic group of order n; explicit groups, nonabelian ones included, are not "
            "supported)");
  }

  if (std::find(cfg.tasks.begin(), cfg.tasks.end(), TaskKind::verify_lemma53) !=
      cfg.tasks.end()) {
    if (cfg.q_choice != QChoice::minus_one) {
      bad.add("task verify_lemma53 needs ring.q = minus_one");
    }
    if (cfg.group_kind != GroupKind::cyclic_permutation) {
      bad.add("task verify_lemma53 needs group.kind cyclic_permutation");
    }
    if (cfg.field_kind != ConfigFieldKind::cyclotomic) {
      bad.add("task verify_lemma53 needs a cyclotomic coefficient field");
    } else if (cfg.cyclotomic_order % cfg.n != 0) {
      bad.add("task verify_lemma53 needs n to divide the cyclotomic order");
    }
  }

  if (cfg.field_kind == ConfigFieldKind::rational || cfg.field_kind == ConfigFieldKind::prime) {
    auto check_no_root = [&](const ScalarLiteral& lit, const std::string& where) {
      if (lit.is_root_power) {
        bad.add(where + " uses zeta, which needs a cyclotomic field");
      }
    };
    for (const auto& row : cfg.q_matrix) {
      for (const auto& lit : row) check_no_root(lit, "ring.q entry");
    }
    for (const auto& gen : cfg.generators) {
      for (const auto& lit : gen.scalars) check_no_root(lit, "generator scalar");
    }
  }

  for (const auto& row : cfg.q_matrix) {
    for (const auto& lit : row) {
      if (!lit.is_root_power && lit.value == 0) bad.add("ring.q entries must be nonzero");
    }
  }
  for (const auto& gen : cfg.generators) {
    for (const auto& lit : gen.scalars) {
      if (!lit.is_root_power && lit.value == 0) bad.add("generator scalars must be nonzero");
    }
  }

  bad.raise_if_any();
  return cfg;
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json ring;
  ring["n"] = cfg.n;
  if (cfg.q_choice == QChoice::minus_one) {
    ring["q"] = "minus_one";
  } else if (cfg.q_choice == QChoice::commutative) {
    ring["q"] = "commutative";
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : cfg.q_matrix) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& lit : row) r.push_back(literal_to_json(lit));
      rows.push_back(std::move(r));
    }
    ring["q"] = std::move(rows);
  }
  out["ring"] = std::move(ring);

  nlohmann::ordered_json field;
  switch (cfg.field_kind) {
    case ConfigFieldKind::rational:
      field["kind"] = "rational";
      break;
    case ConfigFieldKind::cyclotomic:
      field["kind"] = "cyclotomic";
      field["order"] = cfg.cyclotomic_order;
      break;
    case ConfigFieldKind::prime:
      field["kind"] = "prime";
      field["p"] = cfg.prime;
      break;
  }
  out["field"] = std::move(field);

  nlohmann::ordered_json group;
  if (cfg.group_kind == GroupKind::cyclic_permutation) {
    group["kind"] = "cyclic_permutation";
  } else {
    group["kind"] = "explicit";
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& spec : cfg.generators) {
      nlohmann::ordered_json g;
      nlohmann::ordered_json perm = nlohmann::ordered_json::array();
      for (unsigned idx : spec.perm) perm.push_back(idx + 1);
      nlohmann::ordered_json scalars = nlohmann::ordered_json::array();
      for (const auto& lit : spec.scalars) scalars.push_back(literal_to_json(lit));
      g["perm"] = std::move(perm);
      g["scalars"] = std::move(scalars);
      gens.push_back(std::move(g));
    }
    group["generators"] = std::move(gens);
  }
  out["group"] = std::move(group);

  nlohmann::ordered_json smash;
  smash["kind"] = cfg.smash_kind == SmashKind::group ? "group" : "dual";
  out["smash"] = std::move(smash);

  if (cfg.smash_kind == SmashKind::dual) {
    nlohmann::ordered_json grading = nlohmann::ordered_json::array();
    for (unsigned d : cfg.grading) grading.push_back(d);
    out["grading"] = std::move(grading);
  }

  out["max_degree"] = cfg.max_degree;
  out["field_policy"] = field_policy_name(cfg.field_policy);

  nlohmann::ordered_json tasks = nlohmann::ordered_json::array();
  for (TaskKind t : cfg.tasks) tasks.push_back(task_name(t));
  out["tasks"] = std::move(tasks);
  return out;
}

void apply_field_spec(ExperimentConfig& cfg, const std::string& spec) {
  if (spec == "rational") {
    cfg.field_kind = ConfigFieldKind::rational;
    cfg.cyclotomic_order = 1;
    cfg.prime = 0;
    return;
  }
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "cyclotomic") {
    unsigned long order = 0;
    std::size_t pos = 0;
    try {
      order = std::stoul(tail, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tail.size() || tail.empty() || order < 1) {
      throw config_error("field spec \"" + spec + "\" needs a positive order, e.g. cyclotomic:4");
    }
    cfg.field_kind = ConfigFieldKind::cyclotomic;
    cfg.cyclotomic_order = static_cast<unsigned>(order);
    cfg.prime = 0;
    return;
  }
  if (head == "prime") {
    unsigned long long p = 0;
    std::size_t pos = 0;
    try {
      p = std::stoull(tail, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tail.size() || tail.empty()) {
      throw config_error("field spec \"" + spec + "\" needs a prime, e.g. prime:1073741827");
    }
    if (p < (1ull << 30) || p >= (1ull << 31)) {
      throw config_error("field spec prime must lie in [2^30, 2^31)");
    }
    if (!is_prime_u64(p)) {
      throw config_error("field spec value " + std::to_string(p) + " is not prime");
    }
    cfg.field_kind = ConfigFieldKind::prime;
    cfg.prime = p;
    cfg.cyclotomic_order = 1;
    return;
  }
  throw config_error("field spec must be rational, cyclotomic:N, or prime:P, got \"" + spec +
                     "\"");
}

} // namespace skewsmash
