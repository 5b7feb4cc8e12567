#include <iostream>
#include <string>
#include <vector>

#include "schur/cli.hpp"

int main(int argc, char** argv) {
  return schur::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
