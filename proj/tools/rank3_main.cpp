#include <iostream>

#include "rank3/cli.hpp"

int main(int argc, char** argv) { return rank3::run_cli(argc, argv, std::cout, std::cerr); }
