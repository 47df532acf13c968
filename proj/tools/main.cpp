#include <iostream>
#include <string>
#include <vector>

#include "diagcube/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return diagcube::run_command(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "diagcube: " << e.what() << "\n";
        return 1;
    }
}
