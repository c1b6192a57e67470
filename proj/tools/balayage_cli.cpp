#include <iostream>

#include "balayage/cli.hpp"

int main(int argc, char** argv) { return balayage::run_cli(argc, argv, std::cout, std::cerr); }
