#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cychom {

/// Outcome of a mechanical check. Passes exactly when there are no
/// violations.
struct VerificationReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> violations;
  std::vector<std::string> witnesses;

  bool passed() const noexcept { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  void note(std::string what) { witnesses.push_back(std::move(what)); }
  /// Appends the other report's violations and witnesses, prefixed by its name.
  void absorb(const VerificationReport& other);
};

std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);

}  // namespace cychom
