#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "exactlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
  return exactlab::cli::run(args, std::cout, std::cerr, color);
}
