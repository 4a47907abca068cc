#include "vitali/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return vitali::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
