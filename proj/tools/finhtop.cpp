#include <iostream>
#include <string>
#include <vector>

#include "finhtop/cli.hpp"

int main(int argc, char** argv)
{
    return finhtop::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
