#include <iostream>

#include "torusfill/cli.hpp"

int main(int argc, char** argv) {
  return torusfill::cli::main_entry(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
