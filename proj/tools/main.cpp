#include <iostream>
#include <string>
#include <vector>

#include "liftline/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liftline::run_cli(args, std::cin, std::cout, std::cerr);
}
