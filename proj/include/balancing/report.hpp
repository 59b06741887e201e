#pragma once

// JSON interchange for verification reports. Every number, including r and
// the range bounds, is written as a decimal string.

#include <string>

#include <json.hpp>

#include "balancing/identities.hpp"

namespace balancing {

nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// Throws std::invalid_argument on schema violations.
VerificationReport report_from_json(const nlohmann::json& doc);

std::string serialize_report(const VerificationReport& report);
VerificationReport parse_report(const std::string& text);

}  // namespace balancing
