#include <iostream>

#include "plethy/cli.hpp"

int main(int argc, char** argv) {
    return plethy::run_cli(argc, argv, std::cout, std::cerr);
}
