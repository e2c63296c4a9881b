#include <iostream>
#include <string>
#include <vector>

#include "equisym/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return equisym::cli::run(args, std::cout, std::cerr);
}
