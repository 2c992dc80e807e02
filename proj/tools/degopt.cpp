#include <iostream>

#include "degopt/cli.hpp"

int main(int argc, char** argv) {
  return degopt::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
