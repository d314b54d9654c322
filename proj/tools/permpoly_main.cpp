#include <iostream>
#include <string>
#include <vector>

#include "permpoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return permpoly::cli::run(std::move(args), std::cout, std::cerr);
}
