#include <iostream>
#include <string>
#include <vector>

#include "gammaprod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gammaprod::run_cli(args, std::cout, std::cerr);
}
