#include <iostream>

#include "floqlat/cli.hpp"

int main(int argc, char** argv) { return floqlat::run_cli(argc, argv, std::cout, std::cerr); }
