// One line per criterion; exit status 0 only when every selected criterion passes.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cychom/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"cychom acceptance suite"};
  cychom::AcceptanceOptions options;
  options.data_dir = CYCHOM_DATA_DIR;
  std::string json_path;
  bool list = false;
  app.add_option("--data", options.data_dir, "directory containing algebras/");
  app.add_option("--only", options.only, "criterion ids to run")->delimiter(',');
  app.add_option("--json", json_path, "also write the results as JSON");
  app.add_flag("--list", list, "print the criteria and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& [id, title] : cychom::acceptance_criteria()) std::printf("%2d  %s\n", id, title.c_str());
    return 0;
  }
  const auto results = cychom::run_acceptance(options, [](const cychom::CriterionResult& r) {
    std::cout << cychom::format_criterion(r) << std::endl;
  });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  if (!json_path.empty()) std::ofstream(json_path) << cychom::acceptance_to_json(results) << "\n";
  return passed == results.size() ? 0 : 1;
}
