#include <iostream>

#include "hut_tools/cli.hpp"

int main(int argc, char** argv) { return hut::tools::run_cli(argc, argv, std::cout, std::cerr); }
