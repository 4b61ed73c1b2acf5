#include <iostream>
#include <string>
#include <vector>

#include "walkmeg/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return walkmeg::cli::run_cli(args, std::cout, std::cerr);
}
