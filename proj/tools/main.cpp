#include <iostream>
#include <string>
#include <vector>

#include "levgraph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return levgraph::cli::dispatch(args, std::cout, std::cerr);
}
