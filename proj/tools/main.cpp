#include <iostream>
#include <string>
#include <vector>

#include "parasoc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parasoc::cli_dispatch(args, std::cin, std::cout, std::cerr);
}
