#include <iostream>

#include "memload/cli.hpp"

int main(int argc, char** argv) {
  return memload::cli::main(argc, argv, std::cout, std::cerr);
}
