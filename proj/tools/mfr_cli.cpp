#include <iostream>

#include "mfr/cli.hpp"

int main(int argc, char** argv) { return mfr::run_cli(argc, argv, std::cout, std::cerr); }
