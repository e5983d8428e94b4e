#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace skewsmash {

// Machine-readable outcome of an experiment run. The JSON form is the
// canonical one; the table and CSV renderers read from the same payload.
struct Report {
  nlohmann::ordered_json config;
  nlohmann::ordered_json results;
  nlohmann::ordered_json timings_ms;
  std::string version;
};

// Stable JSON with top-level keys config, results, timings_ms, version.
// Identical config and version give byte-identical output apart from the
// wall-clock values inside timings_ms.
std::string emit_json(const Report& r);

// Aligned human-readable rendering of every task result.
std::string emit_table(const Report& r);

// Per-degree quotient table with the header "degree,dim_B,dim_I,h".
// Requires a pertinency result in the report.
std::string emit_csv(const Report& r);

std::string emit_report(const Report& r, const std::string& format);

Report report_from_json(const std::string& text);

// True when any task result carries an error status.
bool report_has_errors(const Report& r);

// Copy with timings zeroed, for determinism comparisons.
Report strip_timings(Report r);

} // namespace skewsmash
