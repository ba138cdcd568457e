#include <iostream>
#include <string>
#include <vector>

#include "spinecheck/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spinecheck::cli::run(args, std::cout, std::cerr);
}
