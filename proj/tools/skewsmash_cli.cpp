#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "skewsmash/errors.hpp"
#include "skewsmash/experiment.hpp"
#include "skewsmash/report.hpp"
#include "skewsmash/repro.hpp"
#include "skewsmash/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw skewsmash::config_error("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw skewsmash::config_error("cannot open output file '" + out_path + "'");
  out << text;
}

struct CommonOptions {
  CLI::Option* max_degree = nullptr;
  CLI::Option* field = nullptr;
  unsigned max_degree_value = 0;
  std::string field_value;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string out_path;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
  opts.max_degree =
      sub->add_option("--max-degree", opts.max_degree_value, "Override the truncation degree");
  opts.field = sub->add_option("--field", opts.field_value,
                               "Override the coefficient field: rational, cyclotomic:N, or "
                               "prime:P");
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  sub->add_option("--seed", opts.seed, "Seed for randomized sampling tasks");
  sub->add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
}

void apply_overrides(skewsmash::ExperimentConfig& cfg, const CommonOptions& opts) {
  if (opts.max_degree->count() > 0) {
    if (opts.max_degree_value < 2) {
      throw skewsmash::config_error("max_degree must be at least 2");
    }
    cfg.max_degree = opts.max_degree_value;
  }
  if (opts.field->count() > 0) {
    skewsmash::apply_field_spec(cfg, opts.field_value);
  }
}

int run_and_emit(const skewsmash::ExperimentConfig& cfg, const CommonOptions& opts) {
  skewsmash::RunOptions run_opts;
  run_opts.seed = opts.seed;
  skewsmash::Report report = skewsmash::run_experiment(cfg, run_opts);
  write_output(skewsmash::emit_report(report, opts.format), opts.out_path);
  return skewsmash::report_has_errors(report) ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of finite group actions on skew polynomial rings"};
  app.set_version_flag("--version", skewsmash::tool_version);
  app.require_subcommand(1);

  std::string config_path;
  std::string repro_id;
  bool list_cases = false;
  CommonOptions run_opts;
  CommonOptions repro_opts;

  CLI::App* run_cmd = app.add_subcommand("run", "Run the tasks from a config file");
  run_cmd->add_option("config", config_path, "Path to a JSON config")->required();
  add_common(run_cmd, run_opts);

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check a config file and echo its normalized form");
  validate_cmd->add_option("config", config_path, "Path to a JSON config")->required();

  CLI::App* repro_cmd = app.add_subcommand("repro", "Run a named reproduction case");
  repro_cmd->add_option("id", repro_id, "Case id; see --list");
  repro_cmd->add_flag("--list", list_cases, "List the available cases");
  add_common(repro_cmd, repro_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate_cmd)) {
      auto cfg = skewsmash::parse_config(read_file(config_path));
      skewsmash::validate_semantics(cfg);
      std::cout << skewsmash::config_to_json(cfg).dump(2) << "\n";
      return 0;
    }
    if (app.got_subcommand(run_cmd)) {
      auto cfg = skewsmash::parse_config(read_file(config_path));
      apply_overrides(cfg, run_opts);
      return run_and_emit(cfg, run_opts);
    }
    if (list_cases) {
      for (const auto& c : skewsmash::repro_cases()) {
        std::cout << c.id << "\n    " << c.summary << "\n";
      }
      return 0;
    }
    if (repro_id.empty()) {
      throw skewsmash::config_error("repro needs a case id or --list");
    }
    auto cfg = skewsmash::find_repro_case(repro_id).config;
    apply_overrides(cfg, repro_opts);
    return run_and_emit(cfg, repro_opts);
  } catch (const skewsmash::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const skewsmash::math_error& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
