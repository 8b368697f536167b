#include <iostream>
#include <string>
#include <vector>

#include "blockcc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return blockcc::run_cli(args, std::cin, std::cout, std::cerr);
}
