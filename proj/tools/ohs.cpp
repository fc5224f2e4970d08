#include <iostream>
#include <string>
#include <vector>

#include <ohs/cli.hpp>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto res = ohs::cli::run_command(args);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
