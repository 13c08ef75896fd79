#include <iostream>

#include "nutkit/cli.hpp"

int main(int argc, char** argv) {
    return nutkit::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
