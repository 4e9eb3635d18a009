#include <iostream>

#include "pgreedy_cli/commands.hpp"

int main(int argc, char** argv) { return pgreedy::cli::run_cli(argc, argv, std::cout, std::cerr); }
