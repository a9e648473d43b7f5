#include <iostream>

#include "hdrmine/cli.hpp"

int main(int argc, char** argv) { return hdrmine::cli::run(argc, argv, std::cout, std::cerr); }
