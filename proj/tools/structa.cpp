#include <iostream>
#include <string>
#include <vector>

#include "structa/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return structa::cli::run_app(std::move(args), std::cout, std::cerr);
}
