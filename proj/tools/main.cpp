#include <iostream>

#include "cplab/harness/cli.hpp"

int main(int argc, char** argv) { return cplab::harness::cli_dispatch(argc, argv, std::cout, std::cerr); }
