#include "jm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return jm::run_cli(argc, argv, std::cout, std::cerr); }
