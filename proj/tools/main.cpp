#include <iostream>
#include <vector>

#include <foldlift_golden_data.h>

#include "foldlift/cli.hpp"

namespace foldlift {
const char* kGoldenTablesJsonView() { return kGoldenTablesJson; }
}  // namespace foldlift

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return foldlift::run_cli(std::move(args), std::cout, std::cerr);
}
