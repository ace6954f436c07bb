#include <iostream>

#include "honeycomb/cli.hpp"

int main(int argc, char** argv) { return honeycomb::run_cli(argc, argv, std::cout, std::cerr); }
