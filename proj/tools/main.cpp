#include <iostream>

#include "singosc/cli.hpp"

int main(int argc, char** argv) { return singosc::cli::run(argc, argv, std::cout, std::cerr); }
