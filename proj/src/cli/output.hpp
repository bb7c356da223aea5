#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "deltabox/config.hpp"

namespace deltabox::cli {

using Json = nlohmann::ordered_json;

/// 12 significant digits for CSV cells.
std::string csv_number(double v);

/// 17 significant digits; non-finite values become null.
std::string json_number(double v);

/// Deterministic pretty printer. Floats always use json_number.
std::string dump_json(const Json& j);

Json config_json(const SystemConfig& config);
Json tool_json();

/// Envelope shared by every JSON document.
Json envelope(const std::string& command, const SystemConfig& config, Json settings,
              Json payload);

/// Leading `#` lines of every CSV file: tool, command, config and settings.
std::string csv_preamble(const std::string& command, const SystemConfig& config,
                         const Json& settings);

std::string csv_row(const std::vector<std::string>& cells);

}  // namespace deltabox::cli
