#include <iostream>

#include "nsjac/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nsjac::run_cli(args, std::cout, std::cerr);
}
