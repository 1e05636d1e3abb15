#include <iostream>

#include "grasscurv/cli.hpp"

int main(int argc, char** argv) { return grasscurv::cli::run(argc, argv, std::cout, std::cerr); }
