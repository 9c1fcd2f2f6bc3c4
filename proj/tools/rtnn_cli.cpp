#include <iostream>

#include "rtnn/cli.hpp"

int main(int argc, char** argv) { return rtnn::run_cli(argc, argv, std::cout, std::cerr); }
