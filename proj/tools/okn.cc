#include <iostream>

#include "okn/cli.h"

int main(int argc, char** argv) {
  return okn::RunCli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
