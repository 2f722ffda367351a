#include <iostream>

#include "mvstop/cli.hpp"

int main(int argc, char** argv) {
  return mvstop::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
