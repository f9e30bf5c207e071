#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sfc::cli::run(argc, argv, std::cout, std::cerr); }
