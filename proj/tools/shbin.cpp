#include <iostream>

#include "shbin_cli.hpp"

int main(int argc, char** argv) { return shbin::cli::run(argc, argv, std::cout, std::cerr); }
