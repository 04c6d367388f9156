#include <iostream>

#include <hybridweyl/cli.hpp>

int main(int argc, char** argv) { return hybridweyl::cli::run(argc, argv, std::cout, std::cerr); }
