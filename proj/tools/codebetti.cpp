#include <iostream>
#include <string>
#include <vector>

#include "codebetti/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return codebetti::run_cli(args, std::cout, std::cerr);
}
