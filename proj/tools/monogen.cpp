#include <iostream>

#include "monogen/cli.hpp"

int main(int argc, char ** argv)
{
    return monogen::cli::run(argc, argv, std::cout, std::cerr);
}
