#include <iostream>
#include <string>
#include <vector>

#include "valflag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return valflag::run(args, std::cout, std::cerr);
}
