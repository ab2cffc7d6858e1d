#include <iostream>
#include <vector>

#include "hbl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hbl::run_cli(args, std::cout, std::cerr);
}
