#include <iostream>
#include <string>
#include <vector>

#include "smt/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return smt::cli::run(args, std::cout, std::cerr);
}
