#include <exception>
#include <iostream>

#include "zdsky/cli.hpp"

int main(int argc, char** argv) {
  try {
    return zdsky::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "zdsky: " << e.what() << "\n";
    return 3;
  }
}
