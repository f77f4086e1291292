#include <iostream>
#include <string>
#include <vector>

#include "charsub/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return charsub::run_cli(args, std::cout, std::cerr);
}
