#include <iostream>
#include <vector>

#include "nbcube/cli_parse.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nbcube::run_cli(std::move(args), std::cout, std::cerr);
}
