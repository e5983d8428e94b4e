#include "skewsmash/pertinency.hpp"

#include <algorithm>

#include "skewsmash/cyclotomic.hpp"
#include "skewsmash/errors.hpp"

namespace skewsmash {

std::string field_policy_name(FieldPolicy p) {
  switch (p) {
    case FieldPolicy::exact:
      return "exact";
    case FieldPolicy::modular_then_exact:
      return "modular_then_exact";
    case FieldPolicy::modular_only:
      return "modular_only";
  }
  return "exact";
}

FieldPolicy parse_field_policy(const std::string& s) {
  if (s == "exact") return FieldPolicy::exact;
  if (s == "modular_then_exact") return FieldPolicy::modular_then_exact;
  if (s == "modular_only") return FieldPolicy::modular_only;
  throw config_error("unknown field_policy \"" + s +
                     "\" (expected exact, modular_then_exact, or modular_only)");
}

long cyclic_skew_totient_floor(unsigned n) {
  long phi = static_cast<long>(euler_phi(n));
  if (n % 4 == 0) return phi / 2;
  return phi;
}

PertinencySummary summarize_pertinency(unsigned ring_vars,
                                       std::vector<DegreeRecord> table, bool certified,
                                       unsigned zero_degree, unsigned window) {
  if (table.size() < 2) throw config_error("pertinency table needs degrees 0 and 1");
  PertinencySummary out;
  out.ring_vars = ring_vars;
  out.table = std::move(table);
  out.certified = certified;
  out.zero_degree = zero_degree;

  std::vector<long long> h;
  h.reserve(out.table.size());
  for (const auto& rec : out.table) h.push_back(rec.h);

  out.estimator_window =
      static_cast<unsigned>(std::min<std::size_t>(window, h.size() - 1));
  out.growth = gk_growth_estimate(h, out.estimator_window);

  if (certified) {
    out.gk_quotient = 0;
    out.pertinency = static_cast<long>(ring_vars);
    out.pertinency_exact = true;
    out.classification = "certified_finite";
  } else if (out.growth.kind == GrowthEstimate::Kind::polynomial) {
    out.gk_quotient = out.growth.gk_dimension;
    out.pertinency = static_cast<long>(ring_vars) - out.growth.gk_dimension;
    out.classification = "estimated(" + std::to_string(out.growth.gk_dimension) + ")";
  } else {
    out.classification = "inconclusive";
  }
  return out;
}

} // namespace skewsmash
