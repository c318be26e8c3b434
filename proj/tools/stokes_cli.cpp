#include "cli_app.hpp"

#include <exception>
#include <iostream>

int main(int argc, char **argv)
{
    try {
        return stokes::cli::run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception &e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return 1;
    }
}
