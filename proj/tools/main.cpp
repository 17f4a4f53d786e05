#include <iostream>

#include "lefschetz/cli.hpp"

int main(int argc, char** argv) { return lefschetz::cli::run(argc, argv, std::cout, std::cerr); }
