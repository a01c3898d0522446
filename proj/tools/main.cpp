#include <gsf/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return gsf::cli::run(argc, argv, std::cout, std::cerr); }
