#include <iostream>

#include "holosamp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return holosamp::cli::run(args, std::cout, std::cerr);
}
