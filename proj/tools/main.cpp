#include <iostream>

#include "riordan/cli.hpp"

int main(int argc, char** argv) {
    return riordan::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
