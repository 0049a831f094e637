#include "divvol/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return divvol::run_cli(argc, argv, std::cout, std::cerr); }
