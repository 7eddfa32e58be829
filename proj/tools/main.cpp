#include <iostream>

#include "collective/cli.hpp"

int main(int argc, char **argv) { return collective::run_cli(argc, argv, std::cout, std::cerr); }
