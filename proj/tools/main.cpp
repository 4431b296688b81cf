#include <iostream>

#include "crosscap/cli.hpp"

int main(int argc, char** argv) {
  return crosscap::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
