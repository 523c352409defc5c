// Command-line entry point; see `mvt --help`.
#include <iostream>

#include "mvt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  auto res = mvt::cli::run(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.code;
}
