#include <iostream>

#include "barrc/cli.hpp"

int main(int argc, char** argv) {
    return barrc::run_cli(argc, argv, std::cout, std::cerr);
}
