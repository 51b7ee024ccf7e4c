#include <iostream>
#include <string>
#include <vector>

#include "conerank/cli.hpp"

int main(int argc, char** argv) {
    return conerank::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
