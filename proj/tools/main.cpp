#include <iostream>
#include <string>
#include <vector>

#include "cli_app.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return omsv::cli::run_cli(args, std::cout, std::cerr, std::cin);
}
