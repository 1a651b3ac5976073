#include <iostream>

#include "vpht/cli.hpp"

int main(int argc, char** argv) { return vpht::cli::main(argc, argv, std::cout, std::cerr); }
