#include <iostream>

#include "lcslab/cli/cli.hpp"

int main(int argc, char** argv) { return lcslab::cli::run(argc, argv, std::cout, std::cerr); }
