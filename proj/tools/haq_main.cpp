#include <iostream>
#include <string>
#include <vector>

#include "haq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return haq::run_command(args, std::cout, std::cerr);
}
