#include <iostream>

#include "genuskit/cli.hpp"

int main(int argc, char** argv) {
    return genuskit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
