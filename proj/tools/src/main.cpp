#include <iostream>

#include "entdist/cli.hpp"

int main(int argc, char** argv) { return entdist::cli::run(argc, argv, std::cout, std::cerr); }
