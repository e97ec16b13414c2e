#include <iostream>

#include "quintic/cli.hpp"

int main(int argc, char** argv)
{
    return quintic::cli::run(argc, argv, std::cout, std::cerr);
}
