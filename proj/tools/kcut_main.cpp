#include <iostream>
#include <string>
#include <vector>

#include "kcut/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kcut::run(args, std::cout, std::cerr);
}
