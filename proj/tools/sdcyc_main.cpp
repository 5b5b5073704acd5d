#include <iostream>
#include <string>
#include <vector>

#include "sdcyc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sdcyc::run(args, std::cout, std::cerr);
}
