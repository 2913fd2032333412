#include <iostream>
#include <string>
#include <vector>

#include "etale/workbench/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return etale::workbench::run_command(args, std::cout, std::cerr);
}
