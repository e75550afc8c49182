#include <iostream>
#include <string>
#include <vector>

#include "bqaoa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bqaoa::run_cli(args, std::cout, std::cerr);
}
