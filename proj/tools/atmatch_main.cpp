#include <iostream>
#include <string>
#include <vector>

#include "atmatch/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return atmatch::run_cli(args, std::cout, std::cerr);
}
