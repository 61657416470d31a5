#include <iostream>
#include <string>
#include <vector>

#include "hamlie/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return hamlie::cli::main(args, std::cout, std::cerr);
}
