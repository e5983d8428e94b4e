#pragma once

#include <cstdint>

#include "skewsmash/config.hpp"
#include "skewsmash/report.hpp"

namespace skewsmash {

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t membership_samples = 50;
};

// Builds the coefficient field, the ring, the group, and the grading, so
// scalar-level violations (broken q symmetry, generators that break the
// commutation relations, a trivial group where a nontrivial one is needed)
// surface without running any long computation.
void validate_semantics(const ExperimentConfig& cfg);

// Runs every configured task in dependency order and assembles the report.
// A failing task is recorded with its error message under its own key; a
// config-level error propagates instead.
Report run_experiment(const ExperimentConfig& cfg, const RunOptions& opts = {});

} // namespace skewsmash
