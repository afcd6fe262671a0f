#include "nodal4/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nodal4::run_cli(args, std::cout, std::cerr);
}
