#include <iostream>

#include "polyharm/cli.hpp"

int main(int argc, char** argv) {
    return polyharm::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
