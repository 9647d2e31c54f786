#include <iostream>
#include <string>
#include <vector>

#include "fatcolor/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return fatcolor::cli::run(args, std::cout, std::cerr);
}
