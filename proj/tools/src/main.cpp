#include <iostream>

#include "kgraph_cli/cli.hpp"

int main(int argc, char** argv) {
  return kgraph::cli::main_entry(argc, argv, std::cout, std::cerr);
}
