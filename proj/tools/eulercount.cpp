#include <iostream>
#include <string>
#include <vector>

#include "eulercount/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return eulercount::cli::dispatch(args, std::cout, std::cerr);
}
