#include <iostream>

#include "calisson/cli.hpp"

int main(int argc, char** argv) { return calisson::run_cli(argc, argv, std::cout, std::cerr); }
