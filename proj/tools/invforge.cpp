#include <cstdlib>
#include <iostream>

#include "invforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> qlimit;
    if (const char* env = std::getenv("INVFORGE_QLIMIT")) qlimit = env;
    return invforge::cli::run(args, std::cout, std::cerr, qlimit);
}
