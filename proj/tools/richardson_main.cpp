#include <iostream>
#include <string>
#include <vector>

#include "richardson/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return richardson::run_cli(args, std::cout, std::cerr);
}
