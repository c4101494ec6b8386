#include <iostream>
#include <string>
#include <vector>

#include "jetvar/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jetvar::run_cli(args, std::cout, std::cerr);
}
