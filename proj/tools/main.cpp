#include <iostream>

#include "curvebound/cli.hpp"

int main(int argc, char** argv) {
    return curvebound::run_cli(argc, argv, std::cout, std::cerr);
}
