#include <iostream>

#include "sublorentz/cli.hpp"

int main(int argc, char** argv) {
  return sublorentz::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
