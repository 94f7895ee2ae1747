#include <iostream>
#include <string>
#include <vector>

#include "dimgroup/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dimgroup::cli::run(args, std::cout, std::cerr);
}
