#include <iostream>

#include "pnw/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return pnw::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
