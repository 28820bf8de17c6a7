#include <iostream>
#include <vector>

#include "eh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eh::run_cli(args, std::cout, std::cerr);
}
