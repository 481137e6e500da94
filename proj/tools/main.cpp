#include "lozenge/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return lozenge::run_cli(argc, argv, std::cout, std::cerr);
}
