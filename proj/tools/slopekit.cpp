#include <iostream>

#include "slopekit/cli/app.hpp"

int main(int argc, char** argv) { return slopekit::cli::run(argc, argv, std::cout, std::cerr); }
