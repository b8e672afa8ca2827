#include <iostream>

#include "knotpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knotpoly::run(args, std::cout, std::cerr);
}
