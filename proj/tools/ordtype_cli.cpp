#include <iostream>
#include <string>
#include <vector>

#include "ordtype/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ordtype::run_cli(args, std::cout, std::cerr);
}
