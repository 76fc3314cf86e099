#include "sandcoh/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return sandcoh::run_cli(argc, argv, std::cout, std::cerr);
}
