#include <iostream>

#include "hadsub/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return hadsub::run_command(args, std::cout, std::cerr);
}
