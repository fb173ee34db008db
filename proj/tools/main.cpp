#include <iostream>
#include <string>
#include <vector>

#include <pyramid/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return pyramid::cli::run(args, std::cin, std::cout, std::cerr);
}
