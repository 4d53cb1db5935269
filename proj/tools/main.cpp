#include <iostream>

#include "i40sh/cli/cli.hpp"

int main(int argc, char** argv) { return i40sh::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
