#include <iostream>
#include <string>
#include <vector>

#include "parideal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parideal::run_cli(args, std::cout, std::cerr);
}
