#include <iostream>

#include "gqm/cli.hpp"

int main(int argc, char** argv) { return gqm::cli::main_entry(argc, argv, std::cout, std::cerr); }
