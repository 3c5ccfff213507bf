#include <iostream>

#include "contraction/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return contraction::cli::run(args, std::cout, std::cerr);
}
