// Batch command-line front end. Output is collected into strings so that the
// same entry point serves the executable and the tests.
#pragma once

#include <string>
#include <vector>

namespace mvt::cli {

struct Result {
  int code = 0;     // 0 ok, 1 domain failure, 2 usage error
  std::string out;  // stdout text
  std::string err;  // stderr text
};

// args[0] is the program name.
Result run(const std::vector<std::string>& args);

}  // namespace mvt::cli
