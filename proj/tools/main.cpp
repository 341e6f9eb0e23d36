#include <iostream>

#include "dualart/cli.hpp"

int main(int argc, char** argv) { return dualart::cli::run(argc, argv, std::cout, std::cerr); }
