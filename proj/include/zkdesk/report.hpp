#pragma once

#include "zkdesk/rational.hpp"

#include <json.hpp>

#include <string>

namespace zkdesk {

inline constexpr const char* kToolVersion = "zkdesk 0.1.0";
inline constexpr const char* kReportSchema = "report_v1";

/// {"num": "...", "den": "...", "den_pow2": p (when dyadic), "value": float}
nlohmann::ordered_json rational_json(const Rational& r);

/// Report skeleton: schema tag, tool version, subcommand, empty config and
/// results slots. Reports embed the full config so a run is reproducible
/// from the report alone.
nlohmann::ordered_json report_skeleton(const std::string& subcommand);

void write_json_file(const std::string& path, const nlohmann::ordered_json& j);
void write_text_file(const std::string& path, const std::string& text);

} // namespace zkdesk
