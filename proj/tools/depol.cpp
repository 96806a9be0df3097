#include <cstdio>
#include <string>
#include <vector>

#include "depol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  depol::cli::Report report = depol::cli::run(args);
  if (report.exit_code == 0) {
    std::fputs(report.text.c_str(), stdout);
  } else {
    std::fputs(report.text.c_str(), stderr);
  }
  return report.exit_code;
}
