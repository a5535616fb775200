#include <iostream>
#include <string>
#include <vector>

#include "spinorbit/cli.hpp"

int main(int argc, char** argv) {
  return spinorbit::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
