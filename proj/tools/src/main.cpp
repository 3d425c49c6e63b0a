#include <iostream>

#include "cxosc/cli.hpp"

int main(int argc, char** argv) { return cxosc::cli::main(argc, argv, std::cout, std::cerr); }
