#include <cstring>
#include <iostream>

#include "tiltlab/reproduce.hpp"

// One line per acceptance criterion; --details adds the individual checks.
int main(int argc, char** argv) {
  bool details = argc > 1 && std::strcmp(argv[1], "--details") == 0;
  bool ok = true;
  for (auto& c : tiltlab::run_acceptance()) {
    std::cout << tiltlab::format_criterion(c, details);
    ok &= c.pass;
  }
  return ok ? 0 : 1;
}
