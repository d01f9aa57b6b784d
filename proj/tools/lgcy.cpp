#include <iostream>

#include "lgcy/cli.hpp"

int main(int argc, char** argv) { return lgcy::run_cli(argc, argv, std::cout, std::cerr); }
