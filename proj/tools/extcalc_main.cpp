#include <iostream>
#include <string>
#include <vector>

#include "extcalc/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return extcalc::run_cli(args, std::cout, std::cerr);
}
