#include <iostream>
#include <string>
#include <vector>

#include "ppkn/cli.h"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ppkn::cli::run(args, std::cin, std::cout, std::cerr);
}
