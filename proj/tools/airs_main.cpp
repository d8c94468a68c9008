#include <iostream>

#include "airs/cli.hpp"

int main(int argc, char** argv) { return airs::cli::run(argc, argv, std::cout, std::cerr); }
