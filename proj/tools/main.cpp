#include <iostream>

#include "scherk/cli.hpp"

int main(int argc, char** argv) { return scherk::cli::run(argc, argv, std::cout, std::cerr); }
