/* This is main.cpp */

#include <iostream>
#include <string>
#include <vector>

#include "flagvar_cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return flagvar::run_cli(args, std::cout, std::cerr);
}
