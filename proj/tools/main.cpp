#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  return indeque::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
