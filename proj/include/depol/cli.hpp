#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace depol::cli {

// Computed results (including NoSolution and FAIL verdicts) exit 0; nonzero
// exit codes are reserved for usage and input errors.
struct Report {
  std::string text;
  nlohmann::json json;
  int exit_code = 0;
};

Report run(const std::vector<std::string>& args);

}  // namespace depol::cli
