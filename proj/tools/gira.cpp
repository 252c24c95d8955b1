#include <iostream>
#include <vector>

#include "gira/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gira::cli_main(args, std::cout, std::cerr);
}
