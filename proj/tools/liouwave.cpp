#include <iostream>
#include <string>
#include <vector>

#include "liouwave/cli.hpp"

int main(int argc, char** argv)
{
    return liouwave::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
