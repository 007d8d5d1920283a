#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return concise::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
