#include <iostream>

#include "plucker_cli/cli.hpp"

int main(int argc, char** argv) { return plucker::cli::run_cli(argc, argv, std::cout, std::cerr); }
