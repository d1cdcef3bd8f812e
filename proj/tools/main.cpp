#include <iostream>
#include <string>
#include <vector>

#include "curate/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return curate::run_cli(args, std::cout, std::cerr);
}
