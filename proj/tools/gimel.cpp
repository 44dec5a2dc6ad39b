#include <iostream>
#include <string>
#include <vector>

#include "gimel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gimel::cli::run(args, std::cout, std::cerr);
}
