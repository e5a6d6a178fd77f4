#include <iostream>

#include "svmc/cli.hpp"

int main(int argc, char** argv) { return svmc::run_cli(argc, argv, std::cout, std::cerr); }
