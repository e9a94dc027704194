#include <iostream>
#include <string>
#include <vector>

#include "ncdef/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ncdef::run_command(args, std::cout, std::cerr);
}
