#include "hbim/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return hbim::cli::run_cli(argc, argv, std::cout, std::cerr); }
