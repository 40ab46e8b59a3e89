#include <iostream>
#include <string>
#include <vector>

#include "lpo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lpo::cli_run(std::move(args), std::cout, std::cerr);
}
