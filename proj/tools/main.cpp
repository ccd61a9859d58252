/// @file
/// @brief cantus executable entry point.

#include <iostream>

#include "cli/app.h"

int main(int argc, char** argv) {
  return cantus::runCli(argc, argv, std::cout, std::cerr);
}
