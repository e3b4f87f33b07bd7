#include <iostream>

#include "twoclose/cli.hpp"

int main(int argc, char** argv) {
    return twoclose::cli::run(argc, argv, std::cout, std::cerr);
}
