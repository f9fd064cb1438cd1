#include <iostream>

#include "invforms_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return invforms::cli::run(args, std::cout);
}
