#include "ukin/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return ukin::cli::run(argc, argv, std::cout, std::cerr); }
