#include <iostream>

#include "weilalg/cli.hpp"

int main(int argc, char** argv) { return weilalg::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
