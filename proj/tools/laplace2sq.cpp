#include <iostream>
#include <string>
#include <vector>

#include "laplace2sq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return laplace2sq::run_cli(args, std::cout, std::cerr);
}
