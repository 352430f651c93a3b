#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  return webperm::cli::run(argc, argv, {std::cout, std::cerr});
}
