#include <iostream>
#include <string>
#include <vector>

#include "qslforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qslforge::run_cli(args, std::cout, std::cerr);
}
