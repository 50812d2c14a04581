#include "warpline/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return warpline::run_cli(argc, argv, std::cout, std::cerr); }
