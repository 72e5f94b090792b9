#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pubgames::cli::run(args, std::cin, std::cout, std::cerr);
}
