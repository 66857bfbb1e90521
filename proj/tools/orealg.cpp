#include <iostream>
#include <string>
#include <vector>

#include "orealg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return orealg::cli_main(args, std::cout, std::cerr);
}
