#include <iostream>
#include <string>
#include <vector>

#include "cograph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cograph::run_cli(args, std::cout, std::cerr);
}
