// Acceptance runner: executes every criterion at full scale and prints one
// pass/fail line each. Exit code 0 only if all criteria pass.

#include <iostream>

#include "gaplab/verify.hpp"

int main(int argc, char** argv) {
  gaplab::verify::Options opt;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--fast") opt.fast = true;
  }
  return gaplab::verify::run_suite(opt, std::cout);
}
