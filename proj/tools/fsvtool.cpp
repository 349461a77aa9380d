#include <iostream>

#include "fsv/cli.hpp"

int main(int argc, char** argv) { return fsv::cli::run(argc, argv, std::cout, std::cerr); }
