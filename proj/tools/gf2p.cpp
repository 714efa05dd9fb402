#include <iostream>
#include <string>
#include <vector>

#include "gf2p/cli.hpp"

int main(int argc, char** argv) {
    return gf2p::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
