#include <iostream>

#include "setcolor/cli.hpp"

int main(int argc, char** argv) { return setcolor::run_cli(argc, argv, std::cout, std::cerr); }
