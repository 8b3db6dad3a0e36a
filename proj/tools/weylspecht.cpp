#include <iostream>

#include "weylspecht/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return weylspecht::run_cli(args, std::cout, std::cerr);
}
