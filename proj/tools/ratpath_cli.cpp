#include <iostream>

#include "ratpath/cli.hpp"

int main(int argc, char** argv) {
    return ratpath::run_cli(argc, argv, std::cout, std::cerr);
}
