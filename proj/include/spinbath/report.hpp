// report.hpp — machine-readable output: RFC-4180 CSV fields with 17
// significant digits, and JSON summaries that embed the resolved config.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spinbath/config.hpp"

namespace spinbath {

using Json = nlohmann::ordered_json;

// Shortest '.'-decimal representation with 17 significant digits.
std::string format_g17(double value);

// Quote a field when RFC 4180 requires it (embedded comma, quote, newline).
std::string csv_field(const std::string& raw);

std::string csv_row(const std::vector<std::string>& fields);

Json config_to_json(const RunConfig& config);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace spinbath
