#include <iostream>

#include "rotnd/cli.hpp"

int main(int argc, char** argv) { return rotnd::cli::run(argc, argv, std::cout, std::cerr); }
