#include <iostream>
#include <string>
#include <vector>

#include <tstrata/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tstrata::run(args, std::cout, std::cerr);
}
