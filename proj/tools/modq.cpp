#include <iostream>

#include "modq/cli.hpp"

int main(int argc, char** argv) {
    return modq::cli::run(argc, argv, std::cout, std::cerr);
}
