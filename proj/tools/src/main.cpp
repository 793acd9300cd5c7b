#include <iostream>

#include "vortex/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vortex::cli::run_main(args, std::cout, std::cerr);
}
