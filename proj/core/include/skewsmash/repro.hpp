#pragma once

#include <string>
#include <vector>

#include "skewsmash/config.hpp"

namespace skewsmash {

// A named, self-contained experiment configuration that reproduces one of
// the documented results. The id doubles as the CLI argument.
struct ReproCase {
  std::string id;
  std::string summary;
  ExperimentConfig config;
};

const std::vector<ReproCase>& repro_cases();

// Throws config_error when the id is unknown.
const ReproCase& find_repro_case(const std::string& id);

} // namespace skewsmash
