#include <iostream>

#include "linarb/cli.hpp"

int main(int argc, char** argv)
{
    return linarb::cli_main(argc, argv, std::cout, std::cerr);
}
