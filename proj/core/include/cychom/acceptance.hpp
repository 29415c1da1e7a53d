#pragma once

#include <functional>
#include <utility>
#include <string>
#include <vector>

namespace cychom {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // what was checked, or the first failure
  double seconds = 0;
};

struct AcceptanceOptions {
  std::string data_dir;   // directory holding algebras/*.alg
  std::vector<int> only;  // criterion ids to run; empty runs all
};

/// Ids and titles of the acceptance criteria, in order.
std::vector<std::pair<int, std::string>> acceptance_criteria();

/// Runs the criteria in order, calling on_result after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  row exactness ...  (0.12 s)  detail"
std::string format_criterion(const CriterionResult& r);
std::string acceptance_to_json(const std::vector<CriterionResult>& results);

/// A fixed bundle of JSON reports used to compare runs with different
/// worker counts.
std::string determinism_probe(const std::string& data_dir);

}  // namespace cychom
