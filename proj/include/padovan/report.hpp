#pragma once

// Serialization of per-prime analyses and scan records.

#include "json.hpp"
#include <string>
#include <vector>

#include "padovan/scan.hpp"

namespace padovan {

enum class Format { Table, Json, Csv };

/// Throws std::invalid_argument for anything but table, json, csv.
Format parse_format(const std::string& name);

struct Analysis {
  SplittingReport splitting;
  PeriodReport period;
  Representation representation;
};

Analysis analyze(u64 p, u64 budget = kDefaultApparitionBudget);

/// Field element in the notation of hand-written tables: F_p elements as
/// residues in [0, p), others with signed least-absolute coefficients,
/// F_{p^2} elements as a+b√D with D ≡ -23, F_{p^3}
/// elements as polynomials in α.
std::string format_element(const ExtElement& x);

nlohmann::json to_json(const Analysis& a);
nlohmann::json to_json(const ScanRecord& rec);

std::string format_analysis(const Analysis& a, Format fmt);
std::string format_scan(const std::vector<ScanRecord>& records, Format fmt);

}  // namespace padovan
