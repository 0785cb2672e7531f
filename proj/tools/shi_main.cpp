#include <iostream>

#include "shi_cli.hpp"

int main(int argc, char** argv) { return shi::cli::run(argc, argv, std::cout, std::cerr); }
