#include "skewsmash/report.hpp"

#include <algorithm>
#include <sstream>

#include "skewsmash/errors.hpp"

namespace skewsmash {

namespace {

using nlohmann::ordered_json;

std::string plain(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string join_array(const ordered_json& arr, const std::string& sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += plain(v);
  }
  return out;
}

void render_aligned(std::ostringstream& os, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  for (const auto& row : rows) {
    os << "  ";
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << "  ";
      os << std::string(widths[i] - row[i].size(), ' ') << row[i];
    }
    os << "\n";
  }
}

void render_pertinency(std::ostringstream& os, const ordered_json& res) {
  if (res.contains("table")) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"degree", "dim_B", "dim_I", "h"});
    for (const auto& rec : res["table"]) {
      rows.push_back({plain(rec["degree"]), plain(rec["dim_B"]), plain(rec["dim_I"]),
                      plain(rec["h"])});
    }
    render_aligned(os, rows);
  }
  if (res.contains("classification")) {
    os << "  classification: " << plain(res["classification"]);
    if (res["classification"] == "certified_finite" && res.contains("zero_degree")) {
      os << " at degree " << plain(res["zero_degree"]);
    }
    os << "\n";
  }
  if (res.contains("gkdim_quotient") && !res["gkdim_quotient"].is_null()) {
    os << "  gkdim_quotient: " << plain(res["gkdim_quotient"]) << "\n";
  }
  if (res.contains("pertinency") && !res["pertinency"].is_null()) {
    os << "  pertinency: " << plain(res["pertinency"]);
    if (res.contains("pertinency_exact")) {
      os << (res["pertinency_exact"].get<bool>() ? " (exact)" : " (estimate)");
    }
    os << "\n";
  }
  for (const char* key : {"engine", "arithmetic"}) {
    if (res.contains(key)) os << "  " << key << ": " << plain(res[key]) << "\n";
  }
  if (res.contains("certificate_primes") && !res["certificate_primes"].empty()) {
    os << "  certificate_primes: " << join_array(res["certificate_primes"], ", ") << "\n";
  }
  if (res.contains("floors")) {
    for (const auto& f : res["floors"]) {
      os << "  floor (" << plain(f["kind"]) << "): pertinency >= " << plain(f["value"]) << "\n";
    }
  }
  if (res.contains("notes")) {
    for (const auto& n : res["notes"]) os << "  note: " << plain(n) << "\n";
  }
}

void render_generic(std::ostringstream& os, const ordered_json& res, int indent = 1) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = res.begin(); it != res.end(); ++it) {
    const ordered_json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (const auto& entry : v) {
        os << pad << "  -";
        for (auto jt = entry.begin(); jt != entry.end(); ++jt) {
          os << " " << jt.key() << "=" << plain(jt.value());
        }
        os << "\n";
      }
    } else if (v.is_array()) {
      os << pad << it.key() << ": " << join_array(v, ", ") << "\n";
    } else if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render_generic(os, v, indent + 1);
    } else {
      os << pad << it.key() << ": " << plain(v) << "\n";
    }
  }
}

} // namespace

std::string emit_json(const Report& r) {
  ordered_json doc;
  doc["config"] = r.config;
  doc["results"] = r.results;
  doc["timings_ms"] = r.timings_ms;
  doc["version"] = r.version;
  return doc.dump(2) + "\n";
}

std::string emit_table(const Report& r) {
  std::ostringstream os;
  os << "skewsmash report (version " << r.version << ")\n";
  os << "config: " << r.config.dump() << "\n";
  for (auto it = r.results.begin(); it != r.results.end(); ++it) {
    os << "\n[" << it.key() << "]\n";
    const ordered_json& res = it.value();
    if (!res.is_object()) {
      os << "  " << plain(res) << "\n";
      continue;
    }
    if (res.contains("status") && res["status"] != "ok") {
      os << "  status: " << plain(res["status"]) << "\n";
      if (res.contains("error")) os << "  error: " << plain(res["error"]) << "\n";
      continue;
    }
    if (it.key() == "pertinency") {
      render_pertinency(os, res);
    } else {
      render_generic(os, res);
    }
  }
  if (!r.timings_ms.empty()) {
    os << "\n[timings_ms]\n";
    render_generic(os, r.timings_ms);
  }
  return os.str();
}

std::string emit_csv(const Report& r) {
  if (!r.results.contains("pertinency") || !r.results["pertinency"].contains("table")) {
    throw config_error("csv output needs a pertinency table; run with the pertinency task");
  }
  std::ostringstream os;
  os << "degree,dim_B,dim_I,h\n";
  for (const auto& rec : r.results["pertinency"]["table"]) {
    os << plain(rec["degree"]) << "," << plain(rec["dim_B"]) << "," << plain(rec["dim_I"])
       << "," << plain(rec["h"]) << "\n";
  }
  return os.str();
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") return emit_json(r);
  if (format == "table") return emit_table(r);
  if (format == "csv") return emit_csv(r);
  throw config_error("unknown format \"" + format + "\" (expected json, table, or csv)");
}

Report report_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("report is not valid JSON: ") + e.what());
  }
  for (const char* key : {"config", "results", "timings_ms", "version"}) {
    if (!doc.contains(key)) {
      throw config_error(std::string("report is missing the ") + key + " key");
    }
  }
  Report r;
  r.config = doc["config"];
  r.results = doc["results"];
  r.timings_ms = doc["timings_ms"];
  r.version = doc["version"].get<std::string>();
  return r;
}

bool report_has_errors(const Report& r) {
  for (const auto& res : r.results) {
    if (res.is_object() && res.contains("status") && res["status"] != "ok") return true;
  }
  return false;
}

Report strip_timings(Report r) {
  for (auto it = r.timings_ms.begin(); it != r.timings_ms.end(); ++it) {
    it.value() = 0;
  }
  return r;
}

} // namespace skewsmash
