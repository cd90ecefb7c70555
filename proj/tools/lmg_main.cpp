#include <iostream>

#include <lmg/cli.hpp>

int main(int argc, char** argv) {
    return lmg::cli_main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
