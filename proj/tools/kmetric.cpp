#include <iostream>

#include "kmetric/cli.hpp"

int main(int argc, char** argv) {
  return kmetric::cli::run_cli(argc, argv, std::cout, std::cerr);
}
