#include <iostream>

#include "lieplan/cli.hpp"

int main(int argc, char** argv) { return lieplan::run_cli(argc, argv, std::cout, std::cerr); }
