#include <iostream>
#include <string>
#include <vector>

#include "wittcv/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wittcv::harness::cli_run(args, std::cout, std::cerr);
}
