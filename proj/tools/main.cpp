#include <iostream>
#include <string>
#include <vector>

#include "monoir/cli.hpp"

int main(int argc, char** argv) {
  return monoir::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
