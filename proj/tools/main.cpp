#include <iostream>
#include <string>
#include <vector>

#include "multitri/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return multitri::run_cli(args, std::cin, std::cout, std::cerr);
}
