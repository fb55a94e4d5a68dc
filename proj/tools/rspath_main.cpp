#include <iostream>
#include <string>
#include <vector>

#include "rspath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rspath::run(args, std::cout, std::cerr);
}
