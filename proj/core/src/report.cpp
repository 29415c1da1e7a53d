#include "cychom/report.hpp"

#include <json.hpp>

namespace cychom {

namespace {

nlohmann::ordered_json encode(const VerificationReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"check", r.name},
          {"parameters", params},
          {"verdict", r.passed() ? "pass" : "fail"},
          {"violations", r.violations},
          {"witnesses", r.witnesses}};
}

}  // namespace

void VerificationReport::absorb(const VerificationReport& other) {
  for (const auto& v : other.violations) violations.push_back(other.name + ": " + v);
  for (const auto& w : other.witnesses) witnesses.push_back(other.name + ": " + w);
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j{{"schema", 1}};
  const nlohmann::ordered_json body = encode(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j.dump(2);
}

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : rs) {
    arr.push_back(encode(r));
    all = all && r.passed();
  }
  nlohmann::ordered_json j{{"schema", 1}, {"verdict", all ? "pass" : "fail"}, {"reports", arr}};
  return j.dump(2);
}

}  // namespace cychom
