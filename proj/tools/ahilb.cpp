#include <iostream>

#include "ahilb/cli.hpp"

int main(int argc, char** argv) { return ahilb::run_cli(argc, argv, std::cout, std::cerr); }
