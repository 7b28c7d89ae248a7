#include <iostream>

#include "btwlab/cli.hpp"

int main(int argc, char** argv) { return btwlab::run(argc, argv, std::cout, std::cerr); }
