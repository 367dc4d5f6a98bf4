#include <iostream>
#include <string>
#include <vector>

#include "primeseq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return primeseq::run_cli(args, std::cout, std::cerr);
}
