#include <iostream>
#include <string>
#include <vector>

#include "hepta/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hepta::run_cli(std::move(args), std::cout, std::cerr);
}
