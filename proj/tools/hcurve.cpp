#include <iostream>

#include "hcurve/cli.hpp"

int main(int argc, char** argv) { return hcurve::cli::run(argc, argv, std::cout, std::cerr); }
