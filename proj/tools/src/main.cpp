#include <iostream>
#include <string>
#include <vector>

#include "forestbound_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return forestbound::cli::run(args, std::cout, std::cerr);
}
