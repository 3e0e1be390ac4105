#include <iostream>

#include <hooksym/cli.hpp>

int main(int argc, char** argv) { return hooksym::cli::run(argc, argv, std::cout, std::cerr); }
