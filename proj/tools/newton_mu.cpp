#include "newton_mu/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return newton_mu::cli::run(argc, argv, std::cout); }
