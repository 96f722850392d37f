#include <iostream>

#include "opxlab/cli.hpp"

int main(int argc, char** argv) { return opxlab::cli::run(argc, argv, std::cout, std::cerr); }
