#include <iostream>

#include "ezv/cli.hpp"

int main(int argc, char** argv) { return ezv::cli::run(argc, argv, std::cout, std::cerr); }
