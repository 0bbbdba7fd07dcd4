#include <iostream>

#include "prohecke/cli.hpp"

int main(int argc, char** argv) { return prohecke::run_cli(argc, argv, std::cout, std::cerr); }
