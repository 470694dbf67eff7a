#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return ecadd::run(argc, argv, std::cout, std::cerr); }
