#include <iostream>
#include <string>
#include <vector>

#include "dsheaf/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dsheaf::run_cli(args, std::cout, std::cerr);
}
