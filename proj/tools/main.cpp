#include <unistd.h>

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return empathy::cli::run(args, {std::cin, std::cout, std::cerr, isatty(STDOUT_FILENO) == 1});
}
