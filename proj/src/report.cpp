#include "balancing/report.hpp"

#include <stdexcept>

namespace balancing {
namespace {

std::string str(std::int64_t x) { return std::to_string(x); }

std::int64_t small_int(const nlohmann::json& node, const char* field) {
  if (!node.is_string()) throw std::invalid_argument(std::string("report field '") + field + "' must be a string");
  const ArbInt value = from_decimal(node.get<std::string>());
  if (!value.fits_slong_p()) throw std::invalid_argument(std::string("report field '") + field + "' out of range");
  return value.get_si();
}

ArbInt big_int(const nlohmann::json& node, const char* field) {
  if (!node.is_string()) throw std::invalid_argument(std::string("report field '") + field + "' must be a string");
  return from_decimal(node.get<std::string>());
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["identity"] = std::string(to_string(report.identity));
  doc["params"] = {{"a", str(report.params.a())}, {"b", str(report.params.b())}};
  doc["r"] = str(report.r);
  doc["range"] = {str(report.range.lo), str(report.range.hi)};
  doc["checked"] = str(report.checked);
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"n", str(f.n)}, {"lhs", to_decimal(f.lhs)}, {"rhs", to_decimal(f.rhs)}});
  }
  doc["failures"] = std::move(failures);
  return doc;
}

VerificationReport report_from_json(const nlohmann::json& doc) {
  try {
    const auto name = doc.at("identity").get<std::string>();
    const auto id = parse_identity_id(name);
    if (!id) throw std::invalid_argument("unknown identity '" + name + "'");
    const auto& params = doc.at("params");
    const auto& range = doc.at("range");
    if (!range.is_array() || range.size() != 2) throw std::invalid_argument("range must be a two-element array");

    VerificationReport report{*id,
                              SeqParams(small_int(params.at("a"), "a"), small_int(params.at("b"), "b")),
                              small_int(doc.at("r"), "r"),
                              {small_int(range[0], "range"), small_int(range[1], "range")},
                              small_int(doc.at("checked"), "checked"),
                              {}};
    for (const auto& f : doc.at("failures")) {
      report.failures.push_back({small_int(f.at("n"), "n"), big_int(f.at("lhs"), "lhs"), big_int(f.at("rhs"), "rhs")});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string serialize_report(const VerificationReport& report) { return report_to_json(report).dump(2); }

VerificationReport parse_report(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  return report_from_json(doc);
}

}  // namespace balancing
