#include <iostream>

#include "harness.hpp"

int main(int argc, char** argv) { return capelli::harness::run_cli(argc, argv, std::cout, std::cerr); }
