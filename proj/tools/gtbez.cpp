#include <iostream>

#include "gtb/commands.hpp"

int main(int argc, char** argv) { return gtb::run_cli(argc, argv, std::cout, std::cerr); }
