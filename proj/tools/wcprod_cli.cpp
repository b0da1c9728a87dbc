#include <iostream>

#include "wcprod/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return wcprod::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
