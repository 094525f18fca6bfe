#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return lindelof::cli::run(argc, argv, std::cout, std::cerr); }
