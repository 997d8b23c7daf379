#include <iostream>
#include <string>
#include <vector>

#include "mdeg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mdeg::cli::run(args, std::cout, std::cerr);
}
