#include "tbundle/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return tbundle::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
