#include <iostream>

#include "lassokit/cli.hpp"

int main(int argc, char** argv) { return lassokit::run_cli(argc, argv, std::cout, std::cerr); }
