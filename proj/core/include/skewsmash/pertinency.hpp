#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewsmash/growth.hpp"
#include "skewsmash/ladder.hpp"

namespace skewsmash {

enum class FieldPolicy { exact, modular_then_exact, modular_only };

std::string field_policy_name(FieldPolicy p);
FieldPolicy parse_field_policy(const std::string& s);

// Assembled outcome of a pertinency computation. The pertinency of the
// action is the ring's growth dimension minus the quotient's; it is exact
// when a vanishing quotient slice certifies the quotient finite dimensional,
// and a finite-difference estimate when the quotient dimensions settle into
// polynomial growth inside the computed range.
struct PertinencySummary {
  unsigned ring_vars = 0;
  std::vector<DegreeRecord> table;
  bool certified = false;
  unsigned zero_degree = 0;
  GrowthEstimate growth;
  unsigned estimator_window = 0;
  std::optional<long> gk_quotient;
  std::optional<long> pertinency;
  bool pertinency_exact = false;
  std::string classification;
  std::string engine;
  std::string arithmetic;
  std::vector<unsigned long long> certificate_primes;
  std::vector<std::pair<std::string, long>> lower_bounds;
  std::vector<std::string> notes;
};

// Theoretical floor for the full-cycle permutation action on the
// (-1)-skew ring: the totient of n, halved when 4 divides n.
long cyclic_skew_totient_floor(unsigned n);

// Classifies a computed quotient dimension table. The estimator window is
// clamped when the table is too short for the requested one.
PertinencySummary summarize_pertinency(unsigned ring_vars,
                                       std::vector<DegreeRecord> table, bool certified,
                                       unsigned zero_degree, unsigned window);

} // namespace skewsmash
