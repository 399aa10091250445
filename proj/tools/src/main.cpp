#include <bandlim_cli/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return bandlim::cli::run(argc, argv, std::cout, std::cerr); }
