#include <iostream>

#include "lsa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lsa::run_command(args, std::cout, std::cerr);
}
