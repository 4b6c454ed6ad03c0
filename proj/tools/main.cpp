#include <iostream>

#include "kmflat/cli.hpp"

int main(int argc, char** argv) {
  return kmflat::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
