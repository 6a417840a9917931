#include <iostream>
#include <string>
#include <vector>

#include "ggraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ggraph::cli::run(args, std::cout, std::cerr);
}
