#include <iostream>
#include <string>
#include <vector>

#include "blockwords/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return blockwords::run_cli(args, std::cout, std::cerr);
}
