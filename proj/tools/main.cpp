#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return a2g::cli::run(argc, argv, std::cout, std::cerr); }
