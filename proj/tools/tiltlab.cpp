#include <iostream>

#include "tiltlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = tiltlab::cli::run(args);
  std::cout << r.out;
  return r.exit_code;
}
