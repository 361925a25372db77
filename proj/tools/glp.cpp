#include <iostream>

#include "glp/cli.hpp"

int main(int argc, char** argv) { return glp::run_cli(argc, argv, std::cout, std::cerr); }
